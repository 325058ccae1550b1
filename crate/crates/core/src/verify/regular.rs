//! Flag-transitivity.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::par;
use crate::poset::FacePoset;
use crate::verify::axioms::flags;
use crate::verify::iso::ISO_MAX_FACES;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RegularityReport {
    pub regular: bool,
    /// Number of automorphisms found (each is determined by the image of the
    /// base flag).
    pub automorphisms: usize,
    pub flags: usize,
}

/// Counts automorphisms by extending `base -> target` for every target
/// flag; the poset is regular when every extension succeeds.
pub fn is_regular(pos: &FacePoset) -> Result<RegularityReport> {
    if pos.len() > ISO_MAX_FACES {
        return Err(Error::FaceLimit { limit: ISO_MAX_FACES });
    }
    let all = flags(pos);
    if all.is_empty() {
        return Err(Error::Structure("poset has no flags".into()));
    }
    let index: HashMap<&[usize], usize> = all.iter().enumerate().map(|(i, f)| (&f[..], i)).collect();
    // adj[x][i]: the flag differing from x only at position i + 1.
    let adj: Vec<Vec<Option<usize>>> = all
        .iter()
        .map(|fl| {
            (1..fl.len() - 1)
                .map(|i| {
                    let alts: Vec<usize> = pos
                        .up(fl[i - 1])
                        .iter()
                        .copied()
                        .filter(|&x| x != fl[i] && pos.up(x).contains(&fl[i + 1]))
                        .collect();
                    match alts[..] {
                        [x] => {
                            let mut other = fl.clone();
                            other[i] = x;
                            index.get(&other[..]).copied()
                        }
                        _ => None,
                    }
                })
                .collect()
        })
        .collect();

    // Sizes of the down- and upsets along a flag; automorphisms preserve them.
    let profile: Vec<(usize, usize)> = (0..pos.len())
        .map(|f| {
            let d = pos.downset(f).iter().filter(|&&b| b).count();
            let u = pos.upset(f).iter().filter(|&&b| b).count();
            (d, u)
        })
        .collect();
    let signature = |fl: &Vec<usize>| fl.iter().map(|&f| profile[f]).collect::<Vec<_>>();
    let base_sig = signature(&all[0]);

    let hits = par::map_range(all.len(), |t| {
        signature(&all[t]) == base_sig && extends(pos, &all, &adj, t)
    });
    let automorphisms = hits.into_iter().filter(|&b| b).count();
    Ok(RegularityReport {
        regular: automorphisms == all.len(),
        automorphisms,
        flags: all.len(),
    })
}

/// Propagates flag 0 to flag `target` along i-adjacencies and checks that
/// the result is a well-defined face automorphism.
fn extends(pos: &FacePoset, all: &[Vec<usize>], adj: &[Vec<Option<usize>>], target: usize) -> bool {
    let mut image = vec![usize::MAX; all.len()];
    image[0] = target;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let y = image[x];
        for (i, &nx) in adj[x].iter().enumerate() {
            match (nx, adj[y][i]) {
                (None, None) => {}
                (Some(nx), Some(ny)) => {
                    if image[nx] == usize::MAX {
                        image[nx] = ny;
                        queue.push_back(nx);
                    } else if image[nx] != ny {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    if image.contains(&usize::MAX) {
        return false;
    }
    let mut face_map = vec![usize::MAX; pos.len()];
    for (x, fl) in all.iter().enumerate() {
        for (&f, &g) in fl.iter().zip(&all[image[x]]) {
            if face_map[f] == usize::MAX {
                face_map[f] = g;
            } else if face_map[f] != g {
                return false;
            }
        }
    }
    let mut hit = vec![false; pos.len()];
    for &g in &face_map {
        if g == usize::MAX || hit[g] {
            return false;
        }
        hit[g] = true;
    }
    pos.covers()
        .into_iter()
        .all(|(lo, hi)| pos.up(face_map[lo]).contains(&face_map[hi]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::Graph;
    use crate::poset::{classic_kg_poset, direct_product, simplex_poset};

    #[test]
    fn polygons_are_regular() {
        let r = is_regular(&classic_kg_poset(&Graph::path(3))).unwrap();
        assert_eq!(
            r,
            RegularityReport {
                regular: true,
                automorphisms: 10,
                flags: 10
            }
        );
        let cube = direct_product(
            &direct_product(&simplex_poset(1).unwrap(), &simplex_poset(1).unwrap()).unwrap(),
            &simplex_poset(1).unwrap(),
        )
        .unwrap();
        assert_eq!(is_regular(&cube).unwrap().automorphisms, 48);
    }

    #[test]
    fn associahedron_is_not_regular() {
        let r = is_regular(&classic_kg_poset(&Graph::path(4))).unwrap();
        assert!(!r.regular);
        // Dihedral symmetry of the hexagon whose triangulations it indexes.
        assert_eq!(r.automorphisms, 12);
        assert_eq!(r.flags, 14 * 6);
    }
}
