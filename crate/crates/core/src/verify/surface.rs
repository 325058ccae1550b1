//! Surfaces from rank-3 posets.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::poset::FacePoset;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// Number of polygons with each edge count.
    pub census: BTreeMap<usize, usize>,
    pub euler: i64,
    pub pseudomanifold_ok: bool,
    pub orientable: bool,
    /// Set only for closed orientable surfaces with even Euler characteristic.
    pub genus: Option<i64>,
}

/// Counts and topology of the 2-complex formed by the faces of ranks 0-2.
pub fn surface_report(pos: &FacePoset) -> Result<SurfaceReport> {
    if pos.max_rank() != 3 {
        return Err(Error::Unsupported(format!(
            "surface report needs a rank-3 poset, got rank {}",
            pos.max_rank()
        )));
    }
    let verts = pos.faces_of_rank(0);
    let edges = pos.faces_of_rank(1);
    let polys = pos.faces_of_rank(2);
    let mut census = BTreeMap::new();
    for &f in &polys {
        *census.entry(pos.down(f).len()).or_insert(0) += 1;
    }
    let euler = verts.len() as i64 - edges.len() as i64 + polys.len() as i64;

    let boundaries: Option<Vec<Vec<usize>>> = polys.iter().map(|&f| boundary_cycle(pos, f)).collect();
    let pseudomanifold_ok = boundaries.is_some()
        && edges.iter().all(|&e| pos.up(e).len() == 2)
        && verts.iter().all(|&v| link_is_cycle(pos, v));
    let orientable = match &boundaries {
        Some(b) if pseudomanifold_ok => orient(pos, &polys, b),
        _ => false,
    };
    let genus = (pseudomanifold_ok && orientable && euler % 2 == 0).then(|| (2 - euler) / 2);
    Ok(SurfaceReport {
        vertices: verts.len(),
        edges: edges.len(),
        faces: polys.len(),
        census,
        euler,
        pseudomanifold_ok,
        orientable,
        genus,
    })
}

/// Vertex sequence around polygon `f`, if its edges form one cycle.
fn boundary_cycle(pos: &FacePoset, f: usize) -> Option<Vec<usize>> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &e in pos.down(f) {
        let ends = pos.down(e);
        if ends.len() != 2 {
            return None;
        }
        adj.entry(ends[0]).or_default().push(ends[1]);
        adj.entry(ends[1]).or_default().push(ends[0]);
    }
    if adj.values().any(|n| n.len() != 2) {
        return None;
    }
    let start = *adj.keys().min()?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = adj[&start][0];
    while cur != start {
        cycle.push(cur);
        let next = if adj[&cur][0] == prev {
            adj[&cur][1]
        } else {
            adj[&cur][0]
        };
        prev = cur;
        cur = next;
    }
    (cycle.len() == adj.len()).then_some(cycle)
}

/// The edges at `v`, joined through the polygons containing them, form one
/// cycle.
fn link_is_cycle(pos: &FacePoset, v: usize) -> bool {
    let star: Vec<usize> = pos.up(v).to_vec();
    let index: HashMap<usize, usize> = star.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut adj = vec![Vec::new(); star.len()];
    let mut polys: HashMap<usize, Vec<usize>> = HashMap::new();
    for &e in &star {
        for &f in pos.up(e) {
            polys.entry(f).or_default().push(index[&e]);
        }
    }
    for ends in polys.values() {
        if ends.len() != 2 {
            return false;
        }
        adj[ends[0]].push(ends[1]);
        adj[ends[1]].push(ends[0]);
    }
    star.len() >= 2 && adj.iter().all(|a| a.len() == 2) && crate::poset::components(&adj).len() == 1
}

/// Tries to orient every polygon so that shared edges are traversed in
/// opposite directions.
fn orient(pos: &FacePoset, polys: &[usize], boundaries: &[Vec<usize>]) -> bool {
    // Direction (+1 from lower to higher vertex id) of each edge in each polygon.
    let mut dirs: Vec<HashMap<(usize, usize), i8>> = Vec::with_capacity(polys.len());
    for cyc in boundaries {
        let mut d = HashMap::new();
        for i in 0..cyc.len() {
            let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            d.insert((a.min(b), a.max(b)), if a < b { 1 } else { -1 });
        }
        dirs.push(d);
    }
    let pidx: HashMap<usize, usize> = polys.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut sign = vec![0i8; polys.len()];
    for s in 0..polys.len() {
        if sign[s] != 0 {
            continue;
        }
        sign[s] = 1;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for &e in pos.down(polys[i]) {
                let ends = pos.down(e);
                let key = (ends[0].min(ends[1]), ends[0].max(ends[1]));
                for &g in pos.up(e) {
                    let j = pidx[&g];
                    if j == i {
                        continue;
                    }
                    let want = -sign[i] * dirs[i][&key] * dirs[j][&key];
                    if sign[j] == 0 {
                        sign[j] = want;
                        queue.push_back(j);
                    } else if sign[j] != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}
