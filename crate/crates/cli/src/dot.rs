//! DOT rendering.

use std::fmt::Write;

use colorful_assoc::exchange::MaxColorTubing;
use colorful_assoc::{Component, Graph, Palette};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Vertices labeled by their colored maximal tubing, one line per edge.
pub fn skeleton(g: &Graph, p: &Palette, c: &Component, name: &str) -> anyhow::Result<String> {
    let sk = c.poset.one_skeleton()?;
    let mut out = format!("graph {} {{\n", quote(name));
    for (i, &f) in sk.vertices.iter().enumerate() {
        let t = c.template(f).expect("vertex template");
        let label = MaxColorTubing::from_template(t).render(g, p);
        writeln!(out, "  v{i} [label={}];", quote(&label)).unwrap();
    }
    for &(a, b) in &sk.edges {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// Hasse diagram, faces labeled `(rank, id)`, edges from lower to upper.
pub fn hasse(c: &Component, name: &str) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for f in 0..c.poset.len() {
        writeln!(out, "  f{f} [label=\"({}, {f})\"];", c.poset.rank(f)).unwrap();
    }
    for (lo, hi) in c.poset.covers() {
        writeln!(out, "  f{lo} -> f{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}
