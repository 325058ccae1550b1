//! Independent oracles for the construction: brute-force recomputation of
//! connectivity, tubing counts, template sets and covering pairs.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use colorful_assoc::coloring::{covers, enumerate_all_templates, enumerate_children, monochromize, root_templates};
use colorful_assoc::exchange::{build_exchange_graph, components, edge_preserves_type};
use colorful_assoc::graphcore::NodeSet;
use colorful_assoc::poset::build_collection;
use colorful_assoc::tubing::{
    classify_tube, core_tube_bijection_check, enumerate_maximal_tubings, enumerate_tubes, enumerate_tubings, owners,
};
use colorful_assoc::verify::surface_report;
use colorful_assoc::{Graph, Palette, TubeKind, DEFAULT_MAX_FACES};

/// Smallest removal set that disconnects `g` or leaves one node, by
/// checking every subset; the complete graph falls through to `n - 1`.
fn connectivity_by_subsets(g: &Graph) -> usize {
    let n = g.node_count();
    if n == 1 {
        return 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in g.universe().subsets() {
        let rest = g.universe().difference(s);
        if rest.len() >= 2 && !g.is_connected_set(rest) {
            best = best.min(s.len());
        }
    }
    best
}

#[test]
fn connectivity_matches_brute_force() {
    for g in common::small_graphs(5) {
        assert_eq!(
            g.vertex_connectivity(),
            connectivity_by_subsets(&g),
            "{:?}",
            g.edges().collect::<Vec<_>>()
        );
    }
}

/// Maximal tubings of a connected graph: choose the universal node `v`,
/// then a maximal tubing of each component of `g - v`.
fn maximal_count(g: &Graph, within: NodeSet) -> usize {
    if within.len() <= 1 {
        return 1;
    }
    within
        .iter()
        .map(|v| {
            g.components_of(within.without(v))
                .into_iter()
                .map(|c| maximal_count(g, c))
                .product::<usize>()
        })
        .sum()
}

#[test]
fn maximal_tubing_counts_follow_the_recursion() {
    for g in common::small_graphs(5).into_iter().filter(Graph::is_connected) {
        assert_eq!(enumerate_maximal_tubings(&g).len(), maximal_count(&g, g.universe()));
    }
    assert_eq!(enumerate_maximal_tubings(&common::claw()).len(), 16);
    assert_eq!(enumerate_maximal_tubings(&Graph::path(5)).len(), 42);
    assert_eq!(enumerate_maximal_tubings(&Graph::cycle(5)).len(), 70);
    assert_eq!(enumerate_maximal_tubings(&Graph::complete(5)).len(), 120);
}

#[test]
fn tubes_are_brute_force_connected_subsets() {
    for g in common::small_graphs(4) {
        let want: BTreeSet<NodeSet> = g
            .universe()
            .subsets()
            .filter(|s| !s.is_empty() && *s != g.universe())
            .filter(|s| {
                let start = s.first().unwrap();
                g.reach(start, *s) == *s
            })
            .collect();
        let got: BTreeSet<NodeSet> = enumerate_tubes(&g).into_iter().map(|t| t.nodes()).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn inner_outer_counts() {
    let count = |g: &Graph| {
        let mut inner = 0;
        let mut outer = 0;
        for t in enumerate_tubes(g) {
            match classify_tube(g, t).unwrap() {
                TubeKind::Inner => inner += 1,
                TubeKind::Outer => outer += 1,
            }
        }
        (inner, outer)
    };
    assert_eq!(count(&Graph::path(3)), (5, 0));
    assert_eq!(count(&Graph::cycle(3)), (3, 3));
    assert_eq!(count(&Graph::complete(4)), (4, 10));
}

#[test]
fn maximal_tubings_hold_a_chain_of_outer_tubes() {
    for g in common::small_graphs(5).into_iter().filter(Graph::is_connected) {
        let n = g.node_count();
        let k = g.vertex_connectivity();
        for t in enumerate_maximal_tubings(&g) {
            let mut outer: Vec<usize> = t
                .iter()
                .filter(|&x| classify_tube(&g, x).unwrap() == TubeKind::Outer)
                .map(|x| x.len())
                .collect();
            outer.sort_unstable();
            let want: Vec<usize> = (n - k + 1..n).collect();
            assert_eq!(outer, want);
        }
    }
}

#[test]
fn core_tube_bijection_on_every_owner() {
    for g in common::small_graphs(5) {
        for tubing in enumerate_tubings(&g) {
            for o in owners(&g, &tubing) {
                assert!(core_tube_bijection_check(&g, &tubing, o).unwrap());
            }
        }
    }
}

#[test]
fn components_partition_all_templates() {
    for g in common::small_graphs(4) {
        for (kind, p) in common::palettes(g.node_count() - 1) {
            let all: BTreeSet<_> = enumerate_all_templates(&g, &p).unwrap().into_iter().collect();
            let comps = build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap();
            let mut seen = BTreeSet::new();
            for c in &comps {
                for t in c.faces.iter().flatten() {
                    assert!(seen.insert(t.clone()), "{kind}: template in two components");
                }
            }
            assert_eq!(seen, all, "{kind} {:?}", g.edges().collect::<Vec<_>>());
        }
    }
}

#[test]
fn generated_children_agree_with_the_declarative_rule() {
    for g in common::small_graphs(4) {
        for (kind, p) in common::palettes(g.node_count() - 1) {
            let all = enumerate_all_templates(&g, &p).unwrap();
            let mut by_size: BTreeMap<usize, Vec<_>> = BTreeMap::new();
            for t in &all {
                by_size.entry(t.tubing().len()).or_default().push(t);
            }
            for parent in &all {
                let kids: BTreeSet<_> = enumerate_children(&g, parent).into_iter().collect();
                for child in by_size.get(&(parent.tubing().len() + 1)).into_iter().flatten() {
                    let declared = covers(&g, &p, parent, child).unwrap();
                    assert_eq!(declared, kids.contains(*child), "{kind}: {}", child.describe(&g, &p));
                }
                for k in &kids {
                    let grown = monochromize(k);
                    assert!(monochromize(parent).is_subset(&grown));
                    assert_eq!(grown.len(), parent.tubing().len() + 1);
                }
            }
        }
    }
}

#[test]
fn root_counts_match_ordered_chains() {
    // (n-1)! / (n-kappa)! distinct outer chains for a full palette.
    for g in common::small_graphs(5).into_iter().filter(Graph::is_connected) {
        let n = g.node_count();
        let k = g.vertex_connectivity();
        let want = (n - k + 1..n).product::<usize>();
        assert_eq!(root_templates(&g, &Palette::full(n - 1)).unwrap().len(), want);
    }
}

#[test]
fn exchange_graph_is_simple_and_type_preserving() {
    for g in common::small_graphs(4) {
        for (_, p) in common::palettes(g.node_count() - 1) {
            let eg = build_exchange_graph(&g, &p, 100_000).unwrap();
            let n = g.node_count();
            assert!(eg.adjacency().iter().all(|a| a.len() == n - 1));
            if g.is_connected() {
                for &(a, b) in &eg.edges {
                    assert!(edge_preserves_type(&g, &eg.nodes[a], &eg.nodes[b]).unwrap());
                }
            }
        }
    }
}

#[test]
fn p4_counts_from_colored_tubings() {
    // Vertices: maximal tubings times orderings of three distinct colors.
    let g = Graph::path(4);
    let p = Palette::full(3);
    let eg = build_exchange_graph(&g, &p, 100_000).unwrap();
    assert_eq!(eg.nodes.len(), 14 * 6);
    assert_eq!(components(&eg).len(), 1);
    let comp = build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap().remove(0);
    let s = surface_report(&comp.poset).unwrap();
    assert_eq!(s.vertices, eg.nodes.len());
    assert_eq!(s.edges, eg.edges.len());
    assert_eq!(2 * s.edges, 3 * s.vertices);
    assert_eq!(s.census.iter().map(|(k, v)| k * v).sum::<usize>(), 2 * s.edges);
    assert_eq!(s.euler, -6);
}

#[test]
fn claw_census_cross_checks() {
    let g = common::claw();
    let comp = build_collection(&g, &Palette::new(["x", "x", "y"]), DEFAULT_MAX_FACES)
        .unwrap()
        .remove(0);
    let s = surface_report(&comp.poset).unwrap();
    assert_eq!((s.vertices, s.edges, s.faces), (48, 72, 24));
    assert_eq!(s.census.iter().map(|(k, v)| k * v).sum::<usize>(), 2 * s.edges);
    assert!(s.pseudomanifold_ok && s.orientable);
    assert_eq!(s.genus, Some(1));
}
