//! Face posets.
//!
//! [`FacePoset`] is a plain ranked poset stored by its covering pairs. Face
//! `0` of every poset built here is the formal least face (rank `-1`).
//! [`build_component`] produces the poset of color templates below one root
//! template; [`classic_kg_poset`], [`simplex_poset`] and [`direct_product`]
//! provide the comparison objects used by the oracles.

use std::collections::{BTreeSet, HashMap};

use crate::coloring::{self, ColorTemplate, Palette};
use crate::error::{Error, Result};
use crate::graphcore::Graph;
use crate::par;
use crate::tubing::{self, Tubing};

/// Default cap on the number of faces in one built component.
pub const DEFAULT_MAX_FACES: usize = 1_000_000;

/// A ranked poset given by its covering pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FacePoset {
    rank: Vec<i32>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl FacePoset {
    /// Builds a poset from per-face ranks and `(lower, upper)` covering pairs.
    pub fn from_covers<I>(rank: Vec<i32>, covers: I) -> FacePoset
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = rank.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for (lo, hi) in covers {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        FacePoset { rank, up, down }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, f: usize) -> i32 {
        self.rank[f]
    }

    pub fn ranks(&self) -> &[i32] {
        &self.rank
    }

    /// Faces covering `f`.
    pub fn up(&self, f: usize) -> &[usize] {
        &self.up[f]
    }

    /// Faces covered by `f`.
    pub fn down(&self, f: usize) -> &[usize] {
        &self.down[f]
    }

    /// All covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(lo, ups)| ups.iter().map(move |&hi| (lo, hi)))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn max_rank(&self) -> i32 {
        self.rank.iter().copied().max().unwrap_or(-1)
    }

    /// Rank of the poset as a polytope (rank of its greatest face).
    pub fn polytope_rank(&self) -> i32 {
        self.max_rank()
    }

    /// The unique face of rank `-1`, if there is exactly one.
    pub fn least(&self) -> Option<usize> {
        let mut it = (0..self.len()).filter(|&f| self.rank[f] == -1);
        let f = it.next()?;
        it.next().is_none().then_some(f)
    }

    /// The unique face of maximal rank, if there is exactly one.
    pub fn greatest(&self) -> Option<usize> {
        let top = self.max_rank();
        let mut it = (0..self.len()).filter(|&f| self.rank[f] == top);
        let f = it.next()?;
        it.next().is_none().then_some(f)
    }

    pub fn faces_of_rank(&self, r: i32) -> Vec<usize> {
        (0..self.len()).filter(|&f| self.rank[f] == r).collect()
    }

    /// Face counts for ranks `0..=max_rank`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.max_rank();
        if top < 0 {
            return Vec::new();
        }
        let mut v = vec![0; top as usize + 1];
        for &r in &self.rank {
            if r >= 0 {
                v[r as usize] += 1;
            }
        }
        v
    }

    /// Faces `>= f`, as a membership vector.
    pub fn upset(&self, f: usize) -> Vec<bool> {
        self.closure(f, &self.up)
    }

    /// Faces `<= f`, as a membership vector.
    pub fn downset(&self, f: usize) -> Vec<bool> {
        self.closure(f, &self.down)
    }

    fn closure(&self, f: usize, edges: &[Vec<usize>]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![f];
        seen[f] = true;
        while let Some(x) = stack.pop() {
            for &y in &edges[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.upset(a)[b]
    }

    /// The section `[lo, hi]`, re-indexed with `lo` as face 0 at rank `-1`.
    ///
    /// Returns the new poset and the original index of each new face.
    pub fn section(&self, lo: usize, hi: usize) -> (FacePoset, Vec<usize>) {
        let above = self.upset(lo);
        let below = self.downset(hi);
        let mut keep: Vec<usize> = (0..self.len()).filter(|&f| above[f] && below[f]).collect();
        keep.sort_by_key(|&f| (self.rank[f], f != lo, f));
        self.restrict(&keep, self.rank[lo] + 1)
    }

    /// Sub-poset on `keep` (in that order) with ranks shifted down by `shift`.
    fn restrict(&self, keep: &[usize], shift: i32) -> (FacePoset, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &f) in keep.iter().enumerate() {
            pos[f] = i;
        }
        let rank = keep.iter().map(|&f| self.rank[f] - shift).collect();
        let covers = keep.iter().flat_map(|&f| {
            let pos = &pos;
            self.up[f]
                .iter()
                .filter(move |&&h| pos[h] != usize::MAX)
                .map(move |&h| (pos[f], pos[h]))
        });
        let covers: Vec<_> = covers.collect();
        (FacePoset::from_covers(rank, covers), keep.to_vec())
    }

    /// Copy with face `f` and its covering pairs removed.
    pub fn without_face(&self, f: usize) -> FacePoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&x| x != f).collect();
        self.restrict(&keep, 0).0
    }

    /// Copy with one covering pair removed.
    pub fn without_cover(&self, lo: usize, hi: usize) -> FacePoset {
        let covers = self.covers().into_iter().filter(|&c| c != (lo, hi));
        FacePoset::from_covers(self.rank.clone(), covers)
    }

    /// Disjoint union of the proper parts of `self` and `other` under a
    /// shared least and greatest face. Used to build disconnected mutants.
    pub fn glued_union(&self, other: &FacePoset) -> Result<FacePoset> {
        let (la, ga) = self.bounds()?;
        let (lb, gb) = other.bounds()?;
        if self.max_rank() != other.max_rank() {
            return Err(Error::Structure("ranks differ".into()));
        }
        let mut rank = vec![-1];
        let mut covers = Vec::new();
        let mut maps = Vec::new();
        for (p, l, g) in [(self, la, ga), (other, lb, gb)] {
            let mut map = vec![usize::MAX; p.len()];
            for (f, slot) in map.iter_mut().enumerate() {
                if f != l && f != g {
                    *slot = rank.len();
                    rank.push(p.rank[f]);
                }
            }
            map[l] = 0;
            maps.push((p, map, g));
        }
        let top = rank.len();
        rank.push(self.max_rank());
        for (p, mut map, g) in maps {
            map[g] = top;
            for (lo, hi) in p.covers() {
                covers.push((map[lo], map[hi]));
            }
        }
        Ok(FacePoset::from_covers(rank, covers))
    }

    /// Least and greatest faces, or a structural error.
    pub fn bounds(&self) -> Result<(usize, usize)> {
        match (self.least(), self.greatest()) {
            (Some(l), Some(g)) => Ok((l, g)),
            _ => Err(Error::Structure("poset is not bounded".into())),
        }
    }

    /// Vertices and edges: rank-0 faces joined under each rank-1 face.
    pub fn one_skeleton(&self) -> Result<Skeleton> {
        let vertices = self.faces_of_rank(0);
        let index: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut edges = Vec::new();
        for e in self.faces_of_rank(1) {
            let ends: Vec<usize> = self.down[e].iter().filter_map(|v| index.get(v).copied()).collect();
            if ends.len() != 2 {
                return Err(Error::Structure(format!(
                    "edge face {e} lies over {} vertices",
                    ends.len()
                )));
            }
            edges.push((ends[0].min(ends[1]), ends[0].max(ends[1])));
        }
        edges.sort_unstable();
        Ok(Skeleton { vertices, edges })
    }
}

/// The 1-skeleton of a face poset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Skeleton {
    /// Face id of each vertex.
    pub vertices: Vec<usize>,
    /// Pairs of vertex positions.
    pub edges: Vec<(usize, usize)>,
}

impl Skeleton {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    pub fn component_count(&self) -> usize {
        components(&self.adjacency()).len()
    }

    /// Whether the skeleton is a single cycle through every vertex.
    pub fn is_cycle(&self) -> bool {
        let n = self.vertices.len();
        n >= 2 && self.edges.len() == n && self.degrees().iter().all(|&d| d == 2) && self.component_count() == 1
    }
}

/// Connected components of an adjacency-list graph, by smallest member.
pub(crate) fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &y in &adj[comp[i]] {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// One poset of the collection: the templates reachable from a root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub root: ColorTemplate,
    /// Template of each face; `None` for the least face.
    pub faces: Vec<Option<ColorTemplate>>,
    pub poset: FacePoset,
}

impl Component {
    pub fn template(&self, f: usize) -> Option<&ColorTemplate> {
        self.faces[f].as_ref()
    }

    pub fn face_of(&self, c: &ColorTemplate) -> Option<usize> {
        self.faces.iter().position(|f| f.as_ref() == Some(c))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.poset.f_vector()
    }

    /// Face ids of rank 0 with their templates.
    pub fn vertices(&self) -> Vec<(usize, &ColorTemplate)> {
        self.poset
            .faces_of_rank(0)
            .into_iter()
            .map(|f| (f, self.faces[f].as_ref().expect("vertex template")))
            .collect()
    }
}

/// Builds the poset below `top` by breadth-first closure of the covering
/// rule. `top` is usually a root template, but any valid template works
/// (its section is then built).
///
/// Faces are numbered least face first, then by rank, then by canonical
/// template order within a rank.
pub fn build_component(g: &Graph, p: &Palette, top: &ColorTemplate, max_faces: usize) -> Result<Component> {
    if let Some(why) = coloring::template_problem(g, p, top) {
        return Err(Error::InvalidTemplate(why));
    }
    let top_rank = g.node_count() as i32 - 1 - top.tubing().len() as i32;
    let mut levels: Vec<Vec<ColorTemplate>> = vec![vec![top.clone()]];
    let mut kids: Vec<Vec<Vec<ColorTemplate>>> = Vec::new();
    let mut count = 2;
    loop {
        let level = levels.last().unwrap();
        let children = par::map(level, |t| coloring::enumerate_children(g, t));
        let next: BTreeSet<ColorTemplate> = children.iter().flatten().cloned().collect();
        kids.push(children);
        if next.is_empty() {
            break;
        }
        count += next.len();
        if count > max_faces {
            return Err(Error::FaceLimit { limit: max_faces });
        }
        levels.push(next.into_iter().collect());
    }

    let mut faces: Vec<Option<ColorTemplate>> = vec![None];
    let mut rank = vec![-1];
    let mut ids: Vec<HashMap<&ColorTemplate, usize>> = vec![HashMap::new(); levels.len()];
    for (depth, level) in levels.iter().enumerate().rev() {
        for t in level {
            ids[depth].insert(t, faces.len());
            faces.push(Some(t.clone()));
            rank.push(top_rank - depth as i32);
        }
    }
    let mut covers = Vec::new();
    for (depth, level) in levels.iter().enumerate() {
        for (i, parent) in level.iter().enumerate() {
            let pid = ids[depth][parent];
            for child in &kids[depth][i] {
                covers.push((ids[depth + 1][child], pid));
            }
        }
    }
    for (f, &r) in rank.iter().enumerate() {
        if r == 0 {
            covers.push((0, f));
        }
    }
    Ok(Component {
        root: top.clone(),
        faces,
        poset: FacePoset::from_covers(rank, covers),
    })
}

/// One component per root template, in canonical root order.
pub fn build_collection(g: &Graph, p: &Palette, max_faces: usize) -> Result<Vec<Component>> {
    let roots = coloring::root_templates(g, p)?;
    par::try_map(&roots, |r| build_component(g, p, r, max_faces))
}

/// Face poset of the classical graph associahedron: tubings ordered by
/// reverse inclusion, plus a least face.
pub fn classic_kg_poset(g: &Graph) -> FacePoset {
    let n = g.node_count() as i32;
    let mut tubings = tubing::enumerate_tubings(g);
    tubings.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let index: HashMap<&Tubing, usize> = tubings.iter().enumerate().map(|(i, t)| (t, i + 1)).collect();
    let mut rank = vec![-1];
    rank.extend(tubings.iter().map(|t| n - 1 - t.len() as i32));
    let mut covers = Vec::new();
    for (i, t) in tubings.iter().enumerate() {
        if t.len() as i32 == n - 1 {
            covers.push((0, i + 1));
        }
        for tube in t.iter() {
            covers.push((i + 1, index[&t.without(tube)]));
        }
    }
    FacePoset::from_covers(rank, covers)
}

/// Face poset of the `i`-simplex (Boolean lattice on `i + 1` atoms).
pub fn simplex_poset(i: i32) -> Result<FacePoset> {
    if !(0..=20).contains(&i) {
        return Err(Error::Unsupported(format!("simplex dimension {i}")));
    }
    let atoms = i as u32 + 1;
    let mut subsets: Vec<u32> = (0..1u32 << atoms).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let index: HashMap<u32, usize> = subsets.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let rank = subsets.iter().map(|s| s.count_ones() as i32 - 1).collect();
    let covers: Vec<(usize, usize)> = subsets
        .iter()
        .flat_map(|&s| {
            let index = &index;
            (0..atoms)
                .filter(move |b| s >> b & 1 == 0)
                .map(move |b| (index[&s], index[&(s | 1 << b)]))
        })
        .collect();
    Ok(FacePoset::from_covers(rank, covers))
}

/// Direct product of two bounded posets: faces are pairs of non-least faces
/// with ranks adding, plus a new least face.
pub fn direct_product(a: &FacePoset, b: &FacePoset) -> Result<FacePoset> {
    let (la, _) = a.bounds()?;
    let (lb, _) = b.bounds()?;
    let mut pairs: Vec<(i32, usize, usize)> = (0..a.len())
        .filter(|&x| x != la)
        .flat_map(|x| (0..b.len()).filter(move |&y| y != lb).map(move |y| (x, y)))
        .map(|(x, y)| (a.rank(x) + b.rank(y), x, y))
        .collect();
    pairs.sort_unstable();
    let index: HashMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, &(_, x, y))| ((x, y), k + 1))
        .collect();
    let mut rank = vec![-1];
    rank.extend(pairs.iter().map(|p| p.0));
    let mut covers = Vec::new();
    for &(r, x, y) in &pairs {
        let id = index[&(x, y)];
        if r == 0 {
            covers.push((0, id));
        }
        for &x2 in a.up(x) {
            covers.push((id, index[&(x2, y)]));
        }
        for &y2 in b.up(y) {
            covers.push((id, index[&(x, y2)]));
        }
    }
    Ok(FacePoset::from_covers(rank, covers))
}

/// Left fold of [`direct_product`]; the empty product is a point.
pub fn product_all(factors: &[FacePoset]) -> Result<FacePoset> {
    let point = simplex_poset(0)?;
    factors.iter().try_fold(point, |acc, f| direct_product(&acc, f))
}
