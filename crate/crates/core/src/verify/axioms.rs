//! The abstract-polytope axiom suite.
//!
//! Every check returns `(ok, witnesses)`; a witness is a short string naming
//! the offending faces by id.

use std::collections::{BTreeMap, HashMap};

use crate::par;
use crate::poset::FacePoset;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AxiomReport {
    pub bounded: bool,
    pub flag_length_ok: bool,
    pub diamond_ok: bool,
    pub strongly_flag_connected: bool,
    pub simple: bool,
    pub witnesses: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.bounded && self.flag_length_ok && self.diamond_ok && self.strongly_flag_connected && self.simple
    }
}

const MAX_WITNESSES: usize = 16;

fn capped(mut w: Vec<String>) -> Vec<String> {
    w.truncate(MAX_WITNESSES);
    w
}

/// Unique least and greatest faces, comparable to everything.
pub fn check_bounded(pos: &FacePoset) -> (bool, Vec<String>) {
    let mut w = Vec::new();
    let least = pos.least();
    let greatest = pos.greatest();
    if least.is_none() {
        w.push("no unique face of rank -1".to_string());
    }
    if greatest.is_none() {
        w.push(format!("no unique face of rank {}", pos.max_rank()));
    }
    if let (Some(l), Some(g)) = (least, greatest) {
        let above = pos.upset(l);
        let below = pos.downset(g);
        for f in 0..pos.len() {
            if !above[f] {
                w.push(format!("face {f} is not above the least face"));
            }
            if !below[f] {
                w.push(format!("face {f} is not below the greatest face"));
            }
        }
    }
    (w.is_empty(), capped(w))
}

/// Every maximal chain has `rank + 2` faces: covers step rank by one and
/// only the extreme faces lack lower or upper covers.
pub fn check_flag_length(pos: &FacePoset) -> (bool, Vec<String>) {
    let mut w = Vec::new();
    let top = pos.max_rank();
    for (lo, hi) in pos.covers() {
        if pos.rank(hi) != pos.rank(lo) + 1 {
            w.push(format!("cover {lo} < {hi} skips ranks"));
        }
    }
    for f in 0..pos.len() {
        if pos.rank(f) > -1 && pos.down(f).is_empty() {
            w.push(format!("face {f} covers nothing"));
        }
        if pos.rank(f) < top && pos.up(f).is_empty() {
            w.push(format!("face {f} is covered by nothing"));
        }
    }
    (w.is_empty(), capped(w))
}

/// Every interval of length two has exactly two interior faces.
pub fn check_diamond(pos: &FacePoset) -> (bool, Vec<String>) {
    let per_face = par::map_range(pos.len(), |f| {
        let mut between: BTreeMap<usize, usize> = BTreeMap::new();
        for &g in pos.up(f) {
            for &h in pos.up(g) {
                *between.entry(h).or_default() += 1;
            }
        }
        between
            .into_iter()
            .filter(|&(_, k)| k != 2)
            .map(|(h, k)| format!("interval [{f}, {h}] has {k} middle faces"))
            .collect::<Vec<_>>()
    });
    let w: Vec<String> = per_face.into_iter().flatten().collect();
    (w.is_empty(), capped(w))
}

/// Maximal chains from the least to the greatest face.
pub fn flags(pos: &FacePoset) -> Vec<Vec<usize>> {
    let Some(least) = pos.least() else {
        return Vec::new();
    };
    let top = pos.max_rank();
    let mut out = Vec::new();
    let mut chain = vec![least];
    walk_up(pos, &mut chain, &mut |c| {
        if pos.rank(*c.last().unwrap()) == top {
            out.push(c.to_vec());
        }
    });
    out
}

/// Calls `visit` on every upward chain starting at `chain[0]`.
fn walk_up(pos: &FacePoset, chain: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    visit(chain);
    let last = *chain.last().unwrap();
    for &h in pos.up(last) {
        chain.push(h);
        walk_up(pos, chain, visit);
        chain.pop();
    }
}

/// Number of flag-adjacency classes among the given chains (all sharing
/// first and last face).
fn flag_classes(pos: &FacePoset, chains: &[Vec<usize>]) -> usize {
    let index: HashMap<&[usize], usize> = chains.iter().enumerate().map(|(i, c)| (&c[..], i)).collect();
    let mut seen = vec![false; chains.len()];
    let mut classes = 0;
    let mut buf: Vec<usize> = Vec::new();
    for s in 0..chains.len() {
        if seen[s] {
            continue;
        }
        classes += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let c = &chains[x];
            for i in 1..c.len() - 1 {
                for &alt in pos.up(c[i - 1]) {
                    if alt == c[i] || !pos.up(alt).contains(&c[i + 1]) {
                        continue;
                    }
                    buf.clear();
                    buf.extend_from_slice(c);
                    buf[i] = alt;
                    if let Some(&y) = index.get(&buf[..]) {
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
        }
    }
    classes
}

/// Every section `[f, h]` is flag-connected.
///
/// Sections of length at most two are flag-connected whenever they are
/// nonempty, so only longer ones are searched.
pub fn check_strong_flag_connectivity(pos: &FacePoset) -> (bool, Vec<String>) {
    let per_face = par::map_range(pos.len(), |f| {
        let mut by_end: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        let mut chain = vec![f];
        walk_up(pos, &mut chain, &mut |c| {
            if c.len() >= 4 {
                by_end.entry(*c.last().unwrap()).or_default().push(c.to_vec());
            }
        });
        by_end
            .into_iter()
            .filter_map(|(h, chains)| {
                let k = flag_classes(pos, &chains);
                (k != 1).then(|| format!("section [{f}, {h}] splits into {k} flag classes"))
            })
            .collect::<Vec<_>>()
    });
    let w: Vec<String> = per_face.into_iter().flatten().collect();
    (w.is_empty(), capped(w))
}

/// Every vertex figure is a Boolean lattice of the full rank.
pub fn check_simple(pos: &FacePoset) -> (bool, Vec<String>) {
    let top = pos.max_rank();
    let vertices = pos.faces_of_rank(0);
    if top < 0 || vertices.is_empty() {
        return (false, vec!["poset has no vertices".into()]);
    }
    let d = top as usize;
    if d > 24 {
        return (false, vec![format!("rank {top} too large for the vertex-figure check")]);
    }
    let per_vertex = par::map(&vertices, |&v| vertex_figure_problem(pos, v, d));
    let w: Vec<String> = per_vertex.into_iter().flatten().collect();
    (w.is_empty(), capped(w))
}

fn vertex_figure_problem(pos: &FacePoset, v: usize, d: usize) -> Option<String> {
    let atoms = pos.up(v);
    if atoms.len() != d {
        return Some(format!("vertex {v} lies in {} edges, expected {d}", atoms.len()));
    }
    let above = pos.upset(v);
    let mut faces: Vec<usize> = (0..pos.len()).filter(|&f| above[f] && f != v).collect();
    faces.sort_by_key(|&f| pos.rank(f));
    let mut mask: HashMap<usize, u32> = HashMap::new();
    for (i, &a) in atoms.iter().enumerate() {
        mask.insert(a, 1 << i);
    }
    for &f in &faces {
        if pos.rank(f) == 1 {
            continue;
        }
        let m = pos
            .down(f)
            .iter()
            .filter_map(|g| mask.get(g))
            .fold(0u32, |acc, &x| acc | x);
        mask.insert(f, m);
    }
    let mut seen = std::collections::HashSet::new();
    let mut covers = 0usize;
    for &f in &faces {
        let m = mask[&f];
        if m.count_ones() as i32 != pos.rank(f) {
            return Some(format!(
                "face {f} above vertex {v} spans {} of its edges",
                m.count_ones()
            ));
        }
        if !seen.insert(m) {
            return Some(format!("two faces above vertex {v} span the same edges"));
        }
        covers += pos.up(f).len();
    }
    let expected_faces = (1usize << d) - 1;
    // Covers between nonempty subsets of a d-set: sum over |S| of (d - |S|).
    let expected_covers = if d == 0 { 0 } else { d * (1usize << (d - 1)) - d };
    if faces.len() != expected_faces || covers != expected_covers {
        return Some(format!("vertex figure of {v} is not a Boolean lattice"));
    }
    None
}

/// Runs the whole suite.
pub fn is_abstract_polytope(pos: &FacePoset) -> AxiomReport {
    let (bounded, w1) = check_bounded(pos);
    let (flag_length_ok, w2) = check_flag_length(pos);
    let (diamond_ok, w3) = check_diamond(pos);
    let (strongly_flag_connected, w4) = check_strong_flag_connectivity(pos);
    let (simple, w5) = check_simple(pos);
    let witnesses = [
        ("bounded", w1),
        ("flag length", w2),
        ("diamond", w3),
        ("strong flag connectivity", w4),
        ("simple", w5),
    ]
    .into_iter()
    .flat_map(|(name, ws)| ws.into_iter().map(move |w| format!("{name}: {w}")))
    .collect();
    AxiomReport {
        bounded,
        flag_length_ok,
        diamond_ok,
        strongly_flag_connected,
        simple,
        witnesses,
    }
}
