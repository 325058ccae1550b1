//! Small simple graphs.
//!
//! Nodes carry string labels and are stored in sorted label order, so a node
//! index doubles as its canonical rank. Node subsets are 64-bit masks; every
//! graph handled here is tiny and most algorithms are brute force over
//! subsets.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported node count.
pub const MAX_NODES: usize = 64;

/// A set of node indices of some [`Graph`].
///
/// Sets order by size first and then lexicographically by their sorted
/// index lists, which is the canonical tube order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_NODES);
        NodeSet(1u64 << i)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_NODES);
        if n == MAX_NODES {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(NodeSet::EMPTY, |s, i| s.with(i))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, i: usize) -> bool {
        i < MAX_NODES && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        NodeSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1u64 << i))
    }

    pub const fn union(self, o: NodeSet) -> Self {
        NodeSet(self.0 | o.0)
    }

    pub const fn intersection(self, o: NodeSet) -> Self {
        NodeSet(self.0 & o.0)
    }

    pub const fn difference(self, o: NodeSet) -> Self {
        NodeSet(self.0 & !o.0)
    }

    pub const fn is_subset(self, o: NodeSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub const fn is_proper_subset(self, o: NodeSet) -> bool {
        self.is_subset(o) && self.0 != o.0
    }

    pub const fn is_disjoint(self, o: NodeSet) -> bool {
        self.0 & o.0 == 0
    }

    /// Lowest index in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> NodeIter {
        NodeIter(self.0)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = NodeSet> {
        // Standard submask walk, emitted in increasing numeric order.
        let mask = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == mask {
                None
            } else {
                Some((s.wrapping_sub(mask)) & mask)
            };
            Some(NodeSet(s))
        })
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        NodeSet::from_indices(iter)
    }
}

#[derive(Clone)]
pub struct NodeIter(u64);

impl Iterator for NodeIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for NodeIter {}

/// A simple undirected graph on labeled nodes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<NodeSet>,
}

impl Graph {
    /// Builds a graph from node labels and label pairs.
    ///
    /// Labels are sorted; duplicate labels, self-loops, repeated edges and
    /// edges to unknown labels are rejected.
    pub fn new<L, S, E>(labels: L, edges: E) -> Result<Graph>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (S, S)>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate node label `{}`", w[0])));
        }
        if labels.len() > MAX_NODES {
            return Err(Error::InvalidGraph(format!(
                "{} nodes exceeds the supported maximum of {MAX_NODES}",
                labels.len()
            )));
        }
        let mut g = Graph {
            adj: vec![NodeSet::EMPTY; labels.len()],
            labels,
        };
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            let i = g.index_of(&a)?;
            let j = g.index_of(&b)?;
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at `{a}`")));
            }
            if g.adj[i].contains(j) {
                return Err(Error::InvalidGraph(format!("duplicate edge `{a}`-`{b}`")));
            }
            g.adj[i] = g.adj[i].with(j);
            g.adj[j] = g.adj[j].with(i);
        }
        Ok(g)
    }

    /// Builds a graph from index adjacency; labels must already be sorted.
    pub(crate) fn from_parts(labels: Vec<String>, adj: Vec<NodeSet>) -> Graph {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(labels.len(), adj.len());
        Graph { labels, adj }
    }

    /// Labels for generated families: `a`, `b`, ... then `n26`, `n27`, ...
    fn generated_labels(n: usize) -> Vec<String> {
        if n <= 26 {
            (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (0..n).map(|i| format!("n{i:02}")).collect()
        }
    }

    fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut adj = vec![NodeSet::EMPTY; n];
        for (i, j) in edges {
            adj[i] = adj[i].with(j);
            adj[j] = adj[j].with(i);
        }
        Graph::from_parts(Graph::generated_labels(n), adj)
    }

    /// Path `P_n`.
    pub fn path(n: usize) -> Graph {
        Graph::from_index_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three nodes");
        Graph::from_index_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        Graph::from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// Null graph `G[n]`: `n` nodes, no edges.
    pub fn null(n: usize) -> Graph {
        Graph::from_index_edges(n, std::iter::empty())
    }

    /// Star `K_{1,leaves}` with center `a`.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_index_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// Disjoint union; labels of `other` must not clash with `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let labels = self.labels.iter().chain(&other.labels).cloned();
        let edges: Vec<(String, String)> = self
            .edges()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .chain(
                other
                    .edges()
                    .map(|(i, j)| (other.labels[i].clone(), other.labels[j].clone())),
            )
            .collect();
        Graph::new(labels, edges)
    }

    /// Copy of the graph with every label prefixed.
    pub fn relabeled(&self, prefix: &str) -> Graph {
        let labels = self.labels.iter().map(|l| format!("{prefix}{l}")).collect();
        Graph::from_parts(labels, self.adj.clone())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownNode(label.to_string()))
    }

    /// Node set from labels.
    pub fn node_set<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<NodeSet> {
        labels
            .into_iter()
            .try_fold(NodeSet::EMPTY, |s, l| Ok(s.with(self.index_of(l)?)))
    }

    pub fn universe(&self) -> NodeSet {
        NodeSet::full(self.node_count())
    }

    pub fn neighbors(&self, i: usize) -> NodeSet {
        self.adj[i]
    }

    /// Nodes adjacent to at least one node of `s` (may intersect `s`).
    pub fn neighborhood(&self, s: NodeSet) -> NodeSet {
        s.iter().fold(NodeSet::EMPTY, |acc, i| acc.union(self.adj[i]))
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, a)| a.iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// Whether some edge joins `a` and `b`.
    pub fn sets_adjacent(&self, a: NodeSet, b: NodeSet) -> bool {
        !self.neighborhood(a).is_disjoint(b)
    }

    /// Nodes reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: NodeSet) -> NodeSet {
        let mut seen = NodeSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced on `s` is connected (false when empty).
    pub fn is_connected_set(&self, s: NodeSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.reach(v, s) == s,
        }
    }

    /// The induced subgraph on `s`.
    pub fn induced_subgraph(&self, s: NodeSet) -> Result<Graph> {
        if !s.is_subset(self.universe()) {
            let bad = s.difference(self.universe()).first().unwrap_or(0);
            return Err(Error::UnknownNode(format!("#{bad}")));
        }
        let keep: Vec<usize> = s.iter().collect();
        let mut pos = [usize::MAX; MAX_NODES];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let adj = keep
            .iter()
            .map(|&i| self.adj[i].intersection(s).iter().map(|j| pos[j]).collect())
            .collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(Graph::from_parts(labels, adj))
    }

    /// True iff the graph has exactly one connected component.
    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.universe())
    }

    /// Connected components, ordered by their smallest node.
    pub fn connected_components(&self) -> Vec<NodeSet> {
        self.components_of(self.universe())
    }

    /// Connected components of the subgraph induced on `s`.
    pub fn components_of(&self, s: NodeSet) -> Vec<NodeSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    /// Vertex connectivity.
    ///
    /// Smallest number of nodes whose removal leaves a disconnected graph.
    /// Conventions: `K_m` gives `m - 1`, a single node gives 1, and a
    /// disconnected or empty graph gives 0.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.node_count();
        if !self.is_connected() {
            return 0;
        }
        if n == 1 {
            return 1;
        }
        let all = self.universe();
        for k in 1..n.saturating_sub(1) {
            let disconnects = all
                .subsets()
                .filter(|cut| cut.len() == k)
                .any(|cut| !self.is_connected_set(all.difference(cut)));
            if disconnects {
                return k;
            }
        }
        n - 1
    }

    /// Renders a node set as `{a,b}`.
    pub fn fmt_set(&self, s: NodeSet) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(i, j)| format!("{}-{}", self.labels[i], self.labels[j]))
            .collect();
        f.debug_struct("Graph")
            .field("nodes", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}
