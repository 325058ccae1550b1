//! The exchange graph on maximal color tubings, and the poset of faces it
//! induces. Built independently of the template machinery and compared
//! against it by [`equivalence_check`].

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::coloring::{self, Color, ColorTemplate, Palette};
use crate::error::{Error, Result};
use crate::graphcore::Graph;
use crate::par;
use crate::poset::{self, FacePoset};
use crate::tubing::{self, Tube, TubeKind, Tubing};
use crate::verify::poset_isomorphic;

/// A maximal tubing with one color per tube.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MaxColorTubing {
    /// Tubes in canonical order with their colors.
    pub tubes: Vec<(Tube, Color)>,
}

impl MaxColorTubing {
    pub fn tubing(&self) -> Tubing {
        self.tubes.iter().map(|&(t, _)| t).collect()
    }

    pub fn color_of(&self, t: Tube) -> Option<Color> {
        self.tubes.iter().find(|&&(u, _)| u == t).map(|&(_, c)| c)
    }

    /// Whether every colored tube of `part` appears here with the same color.
    pub fn contains_all(&self, part: &[(Tube, Color)]) -> bool {
        part.iter().all(|&(t, c)| self.color_of(t) == Some(c))
    }

    /// The colored tubing of a maximal template (each tube shows the first
    /// color of its word).
    pub fn from_template(c: &ColorTemplate) -> MaxColorTubing {
        MaxColorTubing { tubes: c.tube_colors() }
    }

    pub fn render(&self, g: &Graph, p: &Palette) -> String {
        self.tubes
            .iter()
            .map(|&(t, c)| format!("{}:{}", g.fmt_set(t.nodes()), p.name(c)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExchangeGraph {
    pub nodes: Vec<MaxColorTubing>,
    /// `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ExchangeGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn index_of(&self, m: &MaxColorTubing) -> Option<usize> {
        self.nodes.binary_search(m).ok()
    }
}

/// The colored tubes left after removing one tube, and that tube's color.
type SwapKey = (Vec<(Tube, Color)>, Color);

/// Every maximal tubing under every distinct color assignment; two nodes
/// are adjacent when they differ in one tube and the two differing tubes
/// carry the same color.
pub fn build_exchange_graph(g: &Graph, p: &Palette, max_nodes: usize) -> Result<ExchangeGraph> {
    p.check_for(g)?;
    let tubings = tubing::enumerate_maximal_tubings(g);
    let assignments = coloring::sequences(p.colors(), p.len());
    let total = tubings.len().saturating_mul(assignments.len());
    if total > max_nodes {
        return Err(Error::FaceLimit { limit: max_nodes });
    }
    let mut nodes: Vec<MaxColorTubing> = Vec::with_capacity(total);
    for t in &tubings {
        for (seq, _) in &assignments {
            nodes.push(MaxColorTubing {
                tubes: t.iter().zip(seq.iter().copied()).collect(),
            });
        }
    }
    nodes.sort();

    let mut groups: HashMap<SwapKey, Vec<usize>> = HashMap::new();
    for (i, m) in nodes.iter().enumerate() {
        for k in 0..m.tubes.len() {
            let mut rest = m.tubes.clone();
            let (_, c) = rest.remove(k);
            groups.entry((rest, c)).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    for members in groups.values() {
        for (x, &a) in members.iter().enumerate() {
            for &b in &members[x + 1..] {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(ExchangeGraph { nodes, edges })
}

/// The tubes in which two adjacent nodes differ, as `(tube of a, tube of b)`.
pub fn differing_tubes(a: &MaxColorTubing, b: &MaxColorTubing) -> Option<(Tube, Tube)> {
    let ta = a.tubing();
    let tb = b.tubing();
    let only_a: Vec<Tube> = ta.difference(&tb).collect();
    let only_b: Vec<Tube> = tb.difference(&ta).collect();
    match (&only_a[..], &only_b[..]) {
        ([x], [y]) => Some((*x, *y)),
        _ => None,
    }
}

/// Whether the two differing tubes of an edge have the same inner/outer type.
pub fn edge_preserves_type(g: &Graph, a: &MaxColorTubing, b: &MaxColorTubing) -> Result<bool> {
    let (x, y) = differing_tubes(a, b).ok_or_else(|| Error::Structure("nodes are not adjacent".into()))?;
    Ok(tubing::classify_tube(g, x)? == tubing::classify_tube(g, y)?)
}

/// Colors of the outer tubes by size, for a connected graph.
fn outer_colors(g: &Graph, m: &MaxColorTubing) -> Result<Vec<Option<Color>>> {
    if !g.is_connected() {
        return Err(Error::Unsupported(
            "color matching is defined for connected graphs".into(),
        ));
    }
    let n = g.node_count();
    let kappa = g.vertex_connectivity();
    let mut out = Vec::new();
    for s in (n - kappa + 1)..n {
        let found: Vec<Color> = m
            .tubes
            .iter()
            .filter(|(t, _)| t.len() == s && tubing::classify_tube(g, *t).ok() == Some(TubeKind::Outer))
            .map(|&(_, c)| c)
            .collect();
        out.push(if found.len() == 1 { Some(found[0]) } else { None });
    }
    Ok(out)
}

/// The outer tubes of each size carry the same color in `a` and `b`.
pub fn color_matched(g: &Graph, a: &MaxColorTubing, b: &MaxColorTubing) -> Result<bool> {
    Ok(outer_colors(g, a)? == outer_colors(g, b)?)
}

/// Nodes reachable from `v` through nodes that all contain the colored
/// tubes `part`.
pub fn reachable_face(
    eg: &ExchangeGraph,
    adj: &[Vec<usize>],
    part: &[(Tube, Color)],
    v: usize,
) -> Result<BTreeSet<usize>> {
    let start = eg
        .nodes
        .get(v)
        .ok_or_else(|| Error::InvalidTubing(format!("no node {v}")))?;
    if !start.contains_all(part) {
        return Err(Error::InvalidTubing(format!(
            "node {v} does not contain the given colored tubes"
        )));
    }
    let mut seen = BTreeSet::from([v]);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen.contains(&y) && eg.nodes[y].contains_all(part) {
                seen.insert(y);
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Connected components, each sorted, in order of least node.
pub fn components(eg: &ExchangeGraph) -> Vec<Vec<usize>> {
    poset::components(&eg.adjacency())
}

/// The poset of faces `(T, v)` of one component, identified by node sets
/// and ordered by containment, plus a least face.
pub fn build_peg_poset(g: &Graph, eg: &ExchangeGraph, component: &[usize]) -> Result<FacePoset> {
    let n = g.node_count() as i32;
    let adj = eg.adjacency();
    let mut faces: BTreeSet<(i32, Vec<usize>)> = BTreeSet::new();
    let mut covered: HashMap<Vec<(Tube, Color)>, BTreeSet<usize>> = HashMap::new();
    for &v in component {
        let tubes = &eg.nodes[v].tubes;
        for mask in 0u32..(1 << tubes.len()) {
            let part: Vec<(Tube, Color)> = (0..tubes.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| tubes[i])
                .collect();
            if covered.get(&part).is_some_and(|s| s.contains(&v)) {
                continue;
            }
            let face = reachable_face(eg, &adj, &part, v)?;
            covered.entry(part.clone()).or_default().extend(face.iter().copied());
            faces.insert((n - 1 - part.len() as i32, face.into_iter().collect()));
        }
    }
    let faces: Vec<(i32, Vec<usize>)> = faces.into_iter().collect();
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, (_, set)) in faces.iter().enumerate() {
        for &v in set {
            by_vertex.entry(v).or_default().push(i + 1);
        }
    }
    let mut rank = vec![-1];
    rank.extend(faces.iter().map(|f| f.0));
    let mut covers = Vec::new();
    for (i, (r, set)) in faces.iter().enumerate() {
        if *r == 0 {
            covers.push((0, i + 1));
        }
        for &h in &by_vertex[&set[0]] {
            let (rh, sh) = &faces[h - 1];
            if *rh == r + 1 && set.iter().all(|v| sh.binary_search(v).is_ok()) {
                covers.push((i + 1, h));
            }
        }
    }
    Ok(FacePoset::from_covers(rank, covers))
}

/// Compares the exchange-graph construction with the template construction:
/// component counts, color-matched classes (connected graphs), vertex sets
/// and order isomorphism of every component.
pub fn equivalence_check(g: &Graph, p: &Palette) -> Result<bool> {
    let built = poset::build_collection(g, p, poset::DEFAULT_MAX_FACES)?;
    let roots = coloring::root_templates(g, p)?;
    let eg = build_exchange_graph(g, p, poset::DEFAULT_MAX_FACES)?;
    let comps = components(&eg);
    if comps.len() != roots.len() || built.len() != roots.len() {
        return Ok(false);
    }
    if g.is_connected() {
        let mut classes: BTreeMap<Vec<Option<Color>>, Vec<usize>> = BTreeMap::new();
        for (i, m) in eg.nodes.iter().enumerate() {
            classes.entry(outer_colors(g, m)?).or_default().push(i);
        }
        let mut a: Vec<Vec<usize>> = classes.into_values().collect();
        let mut b = comps.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(false);
        }
    }
    let comp_of: HashMap<Vec<usize>, usize> = comps.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let mut matched = vec![false; comps.len()];
    let mut pairs = Vec::new();
    for c in &built {
        let mut ids = Vec::new();
        for (_, t) in c.vertices() {
            match eg.index_of(&MaxColorTubing::from_template(t)) {
                Some(i) => ids.push(i),
                None => return Ok(false),
            }
        }
        ids.sort_unstable();
        match comp_of.get(&ids) {
            Some(&k) if !matched[k] => {
                matched[k] = true;
                pairs.push((k, c));
            }
            _ => return Ok(false),
        }
    }
    let results = par::try_map(&pairs, |&(k, c)| {
        let peg = build_peg_poset(g, &eg, &comps[k])?;
        poset_isomorphic(&peg, &c.poset)
    })?;
    Ok(results.into_iter().all(|b| b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_full_is_a_ten_cycle() {
        let g = Graph::path(3);
        let eg = build_exchange_graph(&g, &Palette::full(2), 1000).unwrap();
        assert_eq!(eg.nodes.len(), 10);
        assert_eq!(eg.edges.len(), 10);
        assert!(eg.adjacency().iter().all(|a| a.len() == 2));
        assert_eq!(components(&eg).len(), 1);
    }

    #[test]
    fn c3_full_splits_by_outer_color() {
        let g = Graph::cycle(3);
        let eg = build_exchange_graph(&g, &Palette::full(2), 1000).unwrap();
        assert_eq!(eg.nodes.len(), 12);
        let comps = components(&eg);
        assert_eq!(comps.iter().map(Vec::len).collect::<Vec<_>>(), vec![6, 6]);
        let (a, b) = (comps[0][0], comps[1][0]);
        assert!(!color_matched(&g, &eg.nodes[a], &eg.nodes[b]).unwrap());
        assert!(color_matched(&g, &eg.nodes[a], &eg.nodes[comps[0][3]]).unwrap());
    }

    #[test]
    fn reachable_face_extremes() {
        let g = Graph::path(3);
        let eg = build_exchange_graph(&g, &Palette::full(2), 1000).unwrap();
        let adj = eg.adjacency();
        let whole = reachable_face(&eg, &adj, &[], 0).unwrap();
        assert_eq!(whole.len(), 10);
        let all = eg.nodes[0].tubes.clone();
        assert_eq!(reachable_face(&eg, &adj, &all, 0).unwrap(), BTreeSet::from([0]));
        let a = Tube::from_labels(&g, ["a"]).unwrap();
        let red = Palette::full(2).colors()[0];
        let v = eg.nodes.iter().position(|m| m.color_of(a) == Some(red)).unwrap();
        assert_eq!(reachable_face(&eg, &adj, &[(a, red)], v).unwrap().len(), 2);
        let w = eg.nodes.iter().position(|m| m.color_of(a) != Some(red)).unwrap();
        assert!(reachable_face(&eg, &adj, &[(a, red)], w).is_err());
    }

    #[test]
    fn peg_matches_templates_on_small_cases() {
        assert!(equivalence_check(&Graph::path(3), &Palette::full(2)).unwrap());
        assert!(equivalence_check(&Graph::cycle(3), &Palette::full(2)).unwrap());
        assert!(equivalence_check(&Graph::null(3), &Palette::full(2)).unwrap());
    }

    #[test]
    fn color_matching_needs_connected_graph() {
        let g = Graph::null(3);
        let eg = build_exchange_graph(&g, &Palette::full(2), 1000).unwrap();
        assert!(color_matched(&g, &eg.nodes[0], &eg.nodes[1]).is_err());
    }
}
