mod common;

use proptest::prelude::*;

use colorful_assoc::coloring::{covers, enumerate_children, validate_template};
use colorful_assoc::poset::{build_collection, classic_kg_poset, direct_product, simplex_poset};
use colorful_assoc::tubing::{enumerate_tubes, tubes_compatible};
use colorful_assoc::verify::{is_abstract_polytope, poset_isomorphic};
use colorful_assoc::{FacePoset, Graph, Palette, DEFAULT_MAX_FACES};

const LABELS: [&str; 5] = ["a", "b", "c", "d", "e"];

/// A graph on `n` nodes from an edge bitmask over all pairs.
fn graph(n: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &(i, j))| (LABELS[i], LABELS[j]));
    Graph::new(LABELS[..n].iter().copied(), edges).unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=4, any::<u32>()).prop_map(|(n, m)| graph(n, m))
}

/// Palette of `size` colors drawn from a few names.
fn palette(size: usize, picks: &[u8]) -> Palette {
    Palette::new((0..size).map(|i| ["r", "g", "b"][picks[i] as usize % 3]))
}

fn graph_and_palette() -> impl Strategy<Value = (Graph, Palette)> {
    (small_graph(), prop::collection::vec(any::<u8>(), 4)).prop_map(|(g, picks)| {
        let p = palette(g.node_count() - 1, &picks);
        (g, p)
    })
}

fn relabel(pos: &FacePoset, seed: u64) -> FacePoset {
    // Fixed face 0, others permuted by a seeded multiplicative shuffle.
    let n = pos.len();
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&f| (f as u64).wrapping_mul(seed | 1).rotate_left(17));
    let mut map = vec![0; n];
    for (k, &f) in order.iter().enumerate() {
        map[f] = k + 1;
    }
    let mut rank = vec![0; n];
    for f in 0..n {
        rank[map[f]] = pos.rank(f);
    }
    FacePoset::from_covers(rank, pos.covers().into_iter().map(|(a, b)| (map[a], map[b])))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn compatibility_is_symmetric(g in small_graph()) {
        let tubes = enumerate_tubes(&g);
        for &a in &tubes {
            for &b in &tubes {
                prop_assert_eq!(tubes_compatible(&g, a, b).unwrap(), tubes_compatible(&g, b, a).unwrap());
            }
        }
    }

    #[test]
    fn connectivity_is_at_most_min_degree(g in small_graph()) {
        if g.is_connected() && g.node_count() > 1 {
            let min_deg = (0..g.node_count()).map(|i| g.neighbors(i).len()).min().unwrap();
            prop_assert!(g.vertex_connectivity() <= min_deg);
        }
    }

    #[test]
    fn every_component_is_a_simple_polytope((g, p) in graph_and_palette()) {
        for c in build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap() {
            let r = is_abstract_polytope(&c.poset);
            prop_assert!(r.passed(), "{:?}", r.witnesses);
            prop_assert_eq!(c.poset.max_rank(), g.node_count() as i32 - 1);
            for t in c.faces.iter().flatten() {
                prop_assert!(validate_template(&g, &p, t));
            }
        }
    }

    #[test]
    fn children_satisfy_the_declarative_rule((g, p) in graph_and_palette()) {
        for c in build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap() {
            for t in c.faces.iter().flatten().take(40) {
                for k in enumerate_children(&g, t) {
                    prop_assert!(covers(&g, &p, t, &k).unwrap());
                    prop_assert!(!covers(&g, &p, &k, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn monochrome_collection_is_the_classic_poset(g in small_graph()) {
        let p = Palette::monochrome(g.node_count() - 1);
        let comps = build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap();
        prop_assert_eq!(comps.len(), 1);
        let classic = classic_kg_poset(&g);
        prop_assert!(poset_isomorphic(&comps[0].poset, &classic).unwrap());
    }

    #[test]
    fn isomorphism_survives_relabelling((g, p) in graph_and_palette(), seed in any::<u64>()) {
        let comps = build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap();
        let a = &comps[0].poset;
        let b = relabel(a, seed);
        prop_assert!(poset_isomorphic(a, &b).unwrap());
        prop_assert!(poset_isomorphic(&b, a).unwrap());
        if a.len() > 3 {
            let cut = b.without_face(b.len() / 2);
            prop_assert!(!poset_isomorphic(a, &cut).unwrap());
        }
    }

    #[test]
    fn products_commute_and_associate(i in 0i32..3, j in 0i32..3, k in 0i32..2) {
        let (a, b, c) = (simplex_poset(i).unwrap(), simplex_poset(j).unwrap(), simplex_poset(k).unwrap());
        let ab = direct_product(&a, &b).unwrap();
        let ba = direct_product(&b, &a).unwrap();
        prop_assert!(poset_isomorphic(&ab, &ba).unwrap());
        let left = direct_product(&ab, &c).unwrap();
        let right = direct_product(&a, &direct_product(&b, &c).unwrap()).unwrap();
        prop_assert!(poset_isomorphic(&left, &right).unwrap());
        prop_assert_eq!(left.max_rank(), i + j + k);
    }

    #[test]
    fn rank_three_components_are_three_valent((g, p) in graph_and_palette()) {
        if g.node_count() == 4 {
            for c in build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap() {
                let f = c.f_vector();
                prop_assert_eq!(3 * f[0], 2 * f[1]);
                let polygon_sides: usize = c.poset.faces_of_rank(2).iter().map(|&x| c.poset.down(x).len()).sum();
                prop_assert_eq!(polygon_sides, 2 * f[1]);
            }
        }
    }
}

#[test]
fn small_graph_enumeration_sizes() {
    let sizes: Vec<usize> = (1..=4).map(|n| common::graphs_up_to_iso(n).len()).collect();
    assert_eq!(sizes, [1, 2, 4, 11]);
}
