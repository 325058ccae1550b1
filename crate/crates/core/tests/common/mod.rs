#![allow(dead_code)]

use std::collections::BTreeSet;

use colorful_assoc::{Graph, Palette};

/// Every graph on `n` labeled nodes `a, b, ...`, one per isomorphism class.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| pairs[k])
            .collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(i, j)| (p[i].min(p[j]), p[i].max(p[j]))).collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let named: Vec<(&str, &str)> = edges
                .iter()
                .map(|&(i, j)| (labels[i].as_str(), labels[j].as_str()))
                .collect();
            out.push(Graph::new(labels.iter().map(String::as_str), named).unwrap());
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// All graphs with at most `n` nodes, up to isomorphism.
pub fn small_graphs(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(graphs_up_to_iso).collect()
}

/// Full, monochrome, and (when at least three colors) mixed palettes of
/// `size` colors.
pub fn palettes(size: usize) -> Vec<(&'static str, Palette)> {
    let mut out = vec![("full", Palette::full(size))];
    if size >= 2 {
        out.push(("mono", Palette::monochrome(size)));
    }
    if size >= 3 {
        let mut labels = vec!["x"; size - 1];
        labels.push("y");
        out.push(("mixed", Palette::new(labels)));
    }
    out
}

pub fn claw() -> Graph {
    Graph::star(3)
}
