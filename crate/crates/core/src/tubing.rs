//! Tubes, tubings and core graphs.
//!
//! A tube is a nonempty proper node subset inducing a connected subgraph.
//! Two tubes are compatible when nested or when disjoint with no edge
//! between them. For a disconnected graph, a tubing may contain at most
//! `m - 1` of its `m` components.
//!
//! The whole graph (or, for a disconnected graph, each component that is not
//! itself in the tubing) plays the role of the *universal tube*. It is never
//! stored in a [`Tubing`]; instead it appears as [`Owner::Universal`].

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graphcore::{Graph, NodeSet};

/// A tube of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tube(NodeSet);

impl Tube {
    /// Validates `nodes` as a tube of `g`.
    pub fn new(g: &Graph, nodes: NodeSet) -> Result<Tube> {
        if nodes.is_empty() {
            return Err(Error::InvalidTube("empty node set".into()));
        }
        if !nodes.is_subset(g.universe()) {
            return Err(Error::InvalidTube("node outside the graph".into()));
        }
        if nodes == g.universe() {
            return Err(Error::InvalidTube(format!(
                "{} is the whole graph, not a proper subgraph",
                g.fmt_set(nodes)
            )));
        }
        if !g.is_connected_set(nodes) {
            return Err(Error::InvalidTube(format!(
                "{} does not induce a connected subgraph",
                g.fmt_set(nodes)
            )));
        }
        Ok(Tube(nodes))
    }

    /// Tube from labels.
    pub fn from_labels<'a, I: IntoIterator<Item = &'a str>>(g: &Graph, labels: I) -> Result<Tube> {
        Tube::new(g, g.node_set(labels)?)
    }

    pub(crate) fn new_unchecked(nodes: NodeSet) -> Tube {
        Tube(nodes)
    }

    pub fn nodes(self) -> NodeSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    /// Compatibility without validation.
    pub fn compatible_with(self, g: &Graph, other: Tube) -> bool {
        let (a, b) = (self.0, other.0);
        if a.is_proper_subset(b) || b.is_proper_subset(a) {
            return true;
        }
        a.is_disjoint(b) && !g.sets_adjacent(a, b)
    }
}

impl fmt::Debug for Tube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tube{:?}", self.0)
    }
}

/// A set of pairwise compatible tubes, kept in canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tubing(BTreeSet<Tube>);

impl Tubing {
    pub fn empty() -> Tubing {
        Tubing::default()
    }

    /// Validates a tubing of `g`.
    pub fn new<I: IntoIterator<Item = Tube>>(g: &Graph, tubes: I) -> Result<Tubing> {
        let mut t = Tubing::empty();
        for tube in tubes {
            Tube::new(g, tube.nodes())?;
            if t.0.contains(&tube) {
                return Err(Error::InvalidTubing(format!(
                    "tube {} listed twice",
                    g.fmt_set(tube.nodes())
                )));
            }
            if !t.accepts(g, tube) {
                return Err(Error::InvalidTubing(format!(
                    "tube {} is not compatible with the rest of the tubing",
                    g.fmt_set(tube.nodes())
                )));
            }
            t.0.insert(tube);
        }
        Ok(t)
    }

    /// Builds a tubing from label lists.
    pub fn from_labels(g: &Graph, tubes: &[&[&str]]) -> Result<Tubing> {
        let tubes = tubes
            .iter()
            .map(|ls| Tube::from_labels(g, ls.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Tubing::new(g, tubes)
    }

    /// Whether `tube` can be added: new, compatible with every tube, and not
    /// completing the full set of components.
    pub fn accepts(&self, g: &Graph, tube: Tube) -> bool {
        if self.0.contains(&tube) || !self.0.iter().all(|t| t.compatible_with(g, tube)) {
            return false;
        }
        let comps = g.connected_components();
        if comps.len() > 1 && comps.contains(&tube.nodes()) {
            let present = comps.iter().filter(|c| self.0.contains(&Tube(**c))).count();
            return present + 1 < comps.len();
        }
        true
    }

    /// `self ∪ {tube}` without validation.
    pub fn with(&self, tube: Tube) -> Tubing {
        let mut t = self.clone();
        t.0.insert(tube);
        t
    }

    pub fn without(&self, tube: Tube) -> Tubing {
        let mut t = self.clone();
        t.0.remove(&tube);
        t
    }

    pub fn contains(&self, tube: Tube) -> bool {
        self.0.contains(&tube)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Tube> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &Tubing) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Tubes of `other` missing from `self`.
    pub fn difference<'a>(&'a self, other: &'a Tubing) -> impl Iterator<Item = Tube> + 'a {
        self.0.difference(&other.0).copied()
    }

    /// Union of the tubes strictly inside `outer`.
    pub fn nested_union(&self, outer: NodeSet) -> NodeSet {
        self.0
            .iter()
            .filter(|t| t.nodes().is_proper_subset(outer))
            .fold(NodeSet::EMPTY, |acc, t| acc.union(t.nodes()))
    }

    pub fn fmt_with(&self, g: &Graph) -> String {
        let parts: Vec<String> = self.iter().map(|t| g.fmt_set(t.nodes())).collect();
        format!("[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Tubing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Tube> for Tubing {
    /// Collects without validation.
    fn from_iter<I: IntoIterator<Item = Tube>>(iter: I) -> Self {
        Tubing(iter.into_iter().collect())
    }
}

/// The owner of a color word: a tube, or the universal tube of a component.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Owner {
    Tube(Tube),
    /// Sentinel for a component (the whole graph when connected).
    Universal(NodeSet),
}

impl Owner {
    pub fn nodes(self) -> NodeSet {
        match self {
            Owner::Tube(t) => t.nodes(),
            Owner::Universal(s) => s,
        }
    }

    pub fn is_universal(self) -> bool {
        matches!(self, Owner::Universal(_))
    }
}

/// Inner or outer, relative to the connectivity of a connected graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TubeKind {
    Inner,
    Outer,
}

/// The core graph of an owner in a tubing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoreGraph {
    pub graph: Graph,
    pub owner: Owner,
    /// Ambient node index of each core node.
    pub node_map: Vec<usize>,
}

impl CoreGraph {
    /// Ambient nodes of the core.
    pub fn ambient_nodes(&self) -> NodeSet {
        self.node_map.iter().copied().collect()
    }

    /// Maps a core node set to ambient nodes.
    pub fn to_ambient(&self, s: NodeSet) -> NodeSet {
        s.iter().map(|i| self.node_map[i]).collect()
    }
}

/// All tubes of `g` in canonical order.
pub fn enumerate_tubes(g: &Graph) -> Vec<Tube> {
    let all = g.universe();
    let mut tubes: Vec<Tube> = all
        .subsets()
        .filter(|s| !s.is_empty() && *s != all && g.is_connected_set(*s))
        .map(Tube)
        .collect();
    tubes.sort();
    tubes
}

/// Checked compatibility of two tubes.
pub fn tubes_compatible(g: &Graph, a: Tube, b: Tube) -> Result<bool> {
    Tube::new(g, a.nodes())?;
    Tube::new(g, b.nodes())?;
    Ok(a.compatible_with(g, b))
}

/// Every tubing of `g` (including the empty one), in canonical order.
pub fn enumerate_tubings(g: &Graph) -> Vec<Tubing> {
    let tubes = enumerate_tubes(g);
    let mut out = Vec::new();
    let mut cur = Tubing::empty();
    extend_tubings(g, &tubes, 0, &mut cur, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn extend_tubings(g: &Graph, tubes: &[Tube], from: usize, cur: &mut Tubing, out: &mut Vec<Tubing>) {
    out.push(cur.clone());
    for (i, &t) in tubes.iter().enumerate().skip(from) {
        if cur.accepts(g, t) {
            cur.0.insert(t);
            extend_tubings(g, tubes, i + 1, cur, out);
            cur.0.remove(&t);
        }
    }
}

/// All tubings with `n - 1` tubes.
pub fn enumerate_maximal_tubings(g: &Graph) -> Vec<Tubing> {
    let target = g.node_count().saturating_sub(1);
    let tubes = enumerate_tubes(g);
    let mut out = Vec::new();
    let mut cur = Tubing::empty();
    extend_maximal(g, &tubes, 0, target, &mut cur, &mut out);
    out.sort();
    out
}

fn extend_maximal(g: &Graph, tubes: &[Tube], from: usize, target: usize, cur: &mut Tubing, out: &mut Vec<Tubing>) {
    if cur.len() == target {
        out.push(cur.clone());
        return;
    }
    for (i, &t) in tubes.iter().enumerate().skip(from) {
        if cur.accepts(g, t) {
            cur.0.insert(t);
            extend_maximal(g, tubes, i + 1, target, cur, out);
            cur.0.remove(&t);
        }
    }
}

/// Inner/outer classification for a connected graph.
pub fn classify_tube(g: &Graph, t: Tube) -> Result<TubeKind> {
    if !g.is_connected() {
        return Err(Error::Unsupported(
            "inner/outer tubes are only defined for connected graphs".into(),
        ));
    }
    Tube::new(g, t.nodes())?;
    let threshold = g.node_count() - g.vertex_connectivity();
    Ok(if t.len() <= threshold {
        TubeKind::Inner
    } else {
        TubeKind::Outer
    })
}

/// Universal owners of `tubing`: one per component not present as a tube.
pub fn universal_owners(g: &Graph, tubing: &Tubing) -> Vec<Owner> {
    g.connected_components()
        .into_iter()
        .filter(|c| !tubing.contains(Tube(*c)))
        .map(Owner::Universal)
        .collect()
}

/// Tubes of `tubing` followed by its universal owners.
pub fn owners(g: &Graph, tubing: &Tubing) -> Vec<Owner> {
    tubing
        .iter()
        .map(Owner::Tube)
        .chain(universal_owners(g, tubing))
        .collect()
}

/// Whether `owner` is a legitimate owner for `tubing`.
pub fn is_owner_of(g: &Graph, tubing: &Tubing, owner: Owner) -> bool {
    match owner {
        Owner::Tube(t) => tubing.contains(t),
        Owner::Universal(c) => {
            let comps = g.connected_components();
            comps.contains(&c) && !tubing.contains(Tube(c))
        }
    }
}

/// Ambient nodes of the core of `owner`.
pub fn core_nodes(tubing: &Tubing, owner: Owner) -> NodeSet {
    let outer = owner.nodes();
    outer.difference(tubing.nested_union(outer))
}

/// Core graph of `owner` in `tubing`.
///
/// Core nodes are the nodes of the owner outside every tube nested in it.
/// Two core nodes are joined when adjacent in `g`, or when both touch a
/// common nested tube (any two nodes of a tube are joined by a path inside
/// it, so this is exactly "connected by a path through that tube").
pub fn core_graph(g: &Graph, tubing: &Tubing, owner: Owner) -> Result<CoreGraph> {
    if !is_owner_of(g, tubing, owner) {
        return Err(Error::InvalidTubing(format!(
            "{} is neither a tube of the tubing nor a universal tube",
            g.fmt_set(owner.nodes())
        )));
    }
    Ok(core_graph_unchecked(g, tubing, owner))
}

pub(crate) fn core_graph_unchecked(g: &Graph, tubing: &Tubing, owner: Owner) -> CoreGraph {
    let outer = owner.nodes();
    let core = core_nodes(tubing, owner);
    let nested: Vec<NodeSet> = tubing
        .iter()
        .map(Tube::nodes)
        .filter(|t| t.is_proper_subset(outer))
        .collect();
    let node_map: Vec<usize> = core.iter().collect();
    let mut adj = vec![NodeSet::EMPTY; node_map.len()];
    for (a, &u) in node_map.iter().enumerate() {
        for (b, &v) in node_map.iter().enumerate().skip(a + 1) {
            let joined = g.has_edge(u, v)
                || nested
                    .iter()
                    .any(|&t| !g.neighbors(u).is_disjoint(t) && !g.neighbors(v).is_disjoint(t));
            if joined {
                adj[a] = adj[a].with(b);
                adj[b] = adj[b].with(a);
            }
        }
    }
    let labels = node_map.iter().map(|&i| g.label(i).to_string()).collect();
    CoreGraph {
        graph: Graph::from_parts(labels, adj),
        owner,
        node_map,
    }
}

/// Checks the correspondence between tubes of a core and the tubes of `g`
/// that refine the tubing inside the owner.
///
/// One side enumerates the tubes of `core_graph(g, tubing, owner)`; the
/// other enumerates tubes `h` of `g` that are compatible with the tubing,
/// strictly inside the owner, not in the tubing and not inside any nested
/// tube. The map `h -> h ∩ core` must be a bijection between the two.
pub fn core_tube_bijection_check(g: &Graph, tubing: &Tubing, owner: Owner) -> Result<bool> {
    let core = core_graph(g, tubing, owner)?;
    let core_set = core.ambient_nodes();
    let outer = owner.nodes();
    let nested: Vec<NodeSet> = tubing
        .iter()
        .map(Tube::nodes)
        .filter(|t| t.is_proper_subset(outer))
        .collect();

    let core_side: BTreeSet<NodeSet> = enumerate_tubes(&core.graph)
        .into_iter()
        .map(|t| core.to_ambient(t.nodes()))
        .collect();

    let graph_side: Vec<NodeSet> = enumerate_tubes(g)
        .into_iter()
        .filter(|h| {
            h.nodes().is_proper_subset(outer)
                && !tubing.contains(*h)
                && tubing.iter().all(|t| t.compatible_with(g, *h))
                && !nested.iter().any(|t| h.nodes().is_subset(*t))
        })
        .map(Tube::nodes)
        .collect();

    let images: BTreeSet<NodeSet> = graph_side.iter().map(|h| h.intersection(core_set)).collect();
    Ok(images.len() == graph_side.len() && images == core_side)
}
