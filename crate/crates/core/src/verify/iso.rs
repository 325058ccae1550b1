//! Exact isomorphism of ranked posets.
//!
//! Colour refinement runs on the disjoint union of both posets so that
//! colours are comparable across them. When refinement stalls, one face of
//! the first poset is individualized together with each candidate of the
//! same colour in the second, and the search recurses. A bijection is only
//! accepted after checking every covering pair, so the answer is exact.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::poset::FacePoset;

/// Largest poset (in faces) accepted by [`poset_isomorphic`].
pub const ISO_MAX_FACES: usize = 100_000;

struct Union {
    na: usize,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

/// Whether a rank-preserving order isomorphism `a -> b` exists.
pub fn poset_isomorphic(a: &FacePoset, b: &FacePoset) -> Result<bool> {
    for p in [a, b] {
        if p.len() > ISO_MAX_FACES {
            return Err(Error::FaceLimit { limit: ISO_MAX_FACES });
        }
    }
    if a.len() != b.len() || a.ranks().iter().min() != b.ranks().iter().min() || a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    if a.covers().len() != b.covers().len() {
        return Ok(false);
    }
    let na = a.len();
    let shift = |v: &[usize]| v.iter().map(|&x| x + na).collect::<Vec<_>>();
    let mut up: Vec<Vec<usize>> = (0..na).map(|f| a.up(f).to_vec()).collect();
    let mut down: Vec<Vec<usize>> = (0..na).map(|f| a.down(f).to_vec()).collect();
    up.extend((0..b.len()).map(|f| shift(b.up(f))));
    down.extend((0..b.len()).map(|f| shift(b.down(f))));
    let u = Union { na, up, down };

    let min_rank = a.ranks().iter().copied().min().unwrap_or(0);
    let colors: Vec<u32> = a
        .ranks()
        .iter()
        .chain(b.ranks())
        .map(|&r| (r - min_rank) as u32)
        .collect();
    let cover_set: HashSet<(usize, usize)> = b.covers().into_iter().collect();
    Ok(search(&u, a, &cover_set, colors))
}

/// Refines `colors` until the number of classes stops growing.
fn refine(u: &Union, mut colors: Vec<u32>) -> Vec<u32> {
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..colors.len())
            .map(|f| {
                let mut ups: Vec<u32> = u.up[f].iter().map(|&x| colors[x]).collect();
                let mut downs: Vec<u32> = u.down[f].iter().map(|&x| colors[x]).collect();
                ups.sort_unstable();
                downs.sort_unstable();
                (colors[f], ups, downs)
            })
            .collect();
        let mut ids: BTreeMap<&(u32, Vec<u32>, Vec<u32>), u32> = BTreeMap::new();
        for s in &sigs {
            ids.insert(s, 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i as u32;
        }
        let next: Vec<u32> = sigs.iter().map(|s| ids[s]).collect();
        let k = ids.len();
        colors = next;
        if k == classes {
            return colors;
        }
        classes = k;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

fn search(u: &Union, a: &FacePoset, b_covers: &HashSet<(usize, usize)>, colors: Vec<u32>) -> bool {
    let colors = refine(u, colors);
    let na = u.na;
    let mut members: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (f, &c) in colors.iter().enumerate() {
        let e = members.entry(c).or_default();
        if f < na {
            e.0.push(f);
        } else {
            e.1.push(f - na);
        }
    }
    if members.values().any(|(x, y)| x.len() != y.len()) {
        return false;
    }
    let split = members
        .values()
        .filter(|(x, _)| x.len() > 1)
        .min_by_key(|(x, _)| x.len());
    let Some((xs, ys)) = split else {
        let mut map = vec![0usize; na];
        for (x, y) in members.values() {
            map[x[0]] = y[0];
        }
        return a
            .covers()
            .into_iter()
            .all(|(lo, hi)| b_covers.contains(&(map[lo], map[hi])));
    };
    let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
    let x = xs[0];
    ys.iter().any(|&y| {
        let mut c = colors.clone();
        c[x] = fresh;
        c[y + na] = fresh;
        search(u, a, b_covers, c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::Graph;
    use crate::poset::{classic_kg_poset, direct_product, simplex_poset};

    #[test]
    fn reflexive_and_discriminating() {
        let pent = classic_kg_poset(&Graph::path(3));
        let hex = classic_kg_poset(&Graph::cycle(3));
        assert!(poset_isomorphic(&pent, &pent).unwrap());
        assert!(!poset_isomorphic(&pent, &hex).unwrap());
    }

    #[test]
    fn square_is_the_product_of_intervals() {
        let i = simplex_poset(1).unwrap();
        let sq = direct_product(&i, &i).unwrap();
        let hex = classic_kg_poset(&Graph::cycle(3));
        assert!(!poset_isomorphic(&sq, &hex).unwrap());
        assert!(poset_isomorphic(&i, &classic_kg_poset(&Graph::null(2))).unwrap());
        assert!(poset_isomorphic(&sq, &direct_product(&i, &i).unwrap()).unwrap());
    }

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let p = classic_kg_poset(&Graph::path(4));
        let q = classic_kg_poset(&Graph::new(["d", "c", "b", "a"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap());
        assert!(poset_isomorphic(&p, &q).unwrap());
        let star = classic_kg_poset(&Graph::star(3));
        assert!(!poset_isomorphic(&p, &star).unwrap());
    }
}
