//! The CLI verbs. Each returns the text to print and whether every check
//! it ran succeeded.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use colorful_assoc::coloring::{monochromize, root_templates};
use colorful_assoc::exchange::equivalence_check;
use colorful_assoc::poset::{build_collection, classic_kg_poset};
use colorful_assoc::tubing::{classify_tube, enumerate_tubes};
use colorful_assoc::verify::{
    disconnected_product_check, is_abstract_polytope, is_regular, poset_isomorphic, product_structure_check,
    surface_report,
};
use colorful_assoc::{Component, Graph, Palette, TubeKind};

use crate::dot;
use crate::dump::PosetDump;
use crate::spec;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

pub struct Input {
    pub graph: Graph,
    pub palette: Palette,
    /// Components taken from a dump instead of being built.
    pub loaded: Option<(usize, Component)>,
}

/// Reads a graph specification or a poset dump.
pub fn load_input(path: &Path, palette: Option<&str>) -> Result<Input> {
    let text = spec::read(path)?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("{} is not JSON", path.display()))?;
    if value.get("covers").is_some() {
        let d = PosetDump::from_json(&text)?;
        let (graph, palette, comp) = d.load()?;
        if palette.is_empty() && graph.node_count() == 0 {
            bail!("empty dump");
        }
        return Ok(Input {
            graph,
            palette,
            loaded: Some((d.component, comp)),
        });
    }
    let s = spec::parse(&text)?;
    let graph = s.graph()?;
    let palette = s.palette(&graph, palette)?;
    Ok(Input {
        graph,
        palette,
        loaded: None,
    })
}

/// Parses `--component`: `all` or an index.
pub fn component_filter(arg: &str) -> Result<Option<usize>> {
    if arg == "all" {
        return Ok(None);
    }
    arg.parse::<usize>()
        .map(Some)
        .with_context(|| format!("--component expects an index or `all`, got `{arg}`"))
}

/// Components selected by `filter`, with their ids.
pub fn components(input: &Input, filter: Option<usize>, max_faces: usize) -> Result<Vec<(usize, Component)>> {
    if let Some((id, c)) = &input.loaded {
        if filter.is_some_and(|f| f != *id) {
            bail!("the dump holds component {id} only");
        }
        return Ok(vec![(*id, c.clone())]);
    }
    let all = match filter {
        Some(i) => {
            let roots = root_templates(&input.graph, &input.palette)?;
            let root = roots
                .get(i)
                .with_context(|| format!("component {i} does not exist ({} components)", roots.len()))?;
            let c = colorful_assoc::poset::build_component(&input.graph, &input.palette, root, max_faces)?;
            vec![(i, c)]
        }
        None => build_collection(&input.graph, &input.palette, max_faces)?
            .into_iter()
            .enumerate()
            .collect(),
    };
    Ok(all)
}

fn names(p: &Palette, cs: &[colorful_assoc::Color]) -> Vec<String> {
    cs.iter().map(|&c| p.name(c).to_string()).collect()
}

pub fn tubes(input: &Input, format: Format) -> Result<String> {
    let g = &input.graph;
    let comps = g.connected_components();
    let mut rows = Vec::new();
    for t in enumerate_tubes(g) {
        let kind = if g.is_connected() {
            match classify_tube(g, t)? {
                TubeKind::Inner => "inner",
                TubeKind::Outer => "outer",
            }
        } else {
            let comp = comps
                .iter()
                .find(|c| t.nodes().is_subset(**c))
                .expect("tube lies in a component");
            if *comp == t.nodes() {
                "component"
            } else {
                let k = g.induced_subgraph(*comp)?.vertex_connectivity();
                if t.len() <= comp.len() - k {
                    "inner"
                } else {
                    "outer"
                }
            }
        };
        rows.push((
            g.fmt_set(t.nodes()),
            t.nodes().iter().map(|i| g.label(i).to_string()).collect::<Vec<_>>(),
            kind,
        ));
    }
    Ok(match format {
        Format::Json => {
            let tubes: Vec<Value> = rows.iter().map(|(_, n, k)| json!({"nodes": n, "kind": k})).collect();
            let v = json!({
                "nodes": g.node_count(),
                "connectivity": g.vertex_connectivity(),
                "tubes": tubes,
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        _ => {
            let mut out = format!("{} tubes, connectivity {}\n", rows.len(), g.vertex_connectivity());
            for (s, _, k) in rows {
                out += &format!("{s} {k}\n");
            }
            out
        }
    })
}

pub fn build(input: &Input, comps: &[(usize, Component)], out: Option<&Path>, format: Format) -> Result<String> {
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for (id, c) in comps {
            let d = PosetDump::new(&input.graph, &input.palette, *id, c);
            let path = dir.join(format!("component-{id}.json"));
            std::fs::write(&path, d.to_json() + "\n").with_context(|| format!("cannot write {}", path.display()))?;
        }
    }
    let rows: Vec<(usize, Vec<String>, Vec<usize>)> = comps
        .iter()
        .map(|(id, c)| (*id, names(&input.palette, &c.root.root_chain()), c.f_vector()))
        .collect();
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(id, chain, f)| json!({"component": id, "root_chain": chain, "f_vector": f}))
                .collect();
            serde_json::to_string_pretty(&v)? + "\n"
        }
        _ => rows
            .iter()
            .map(|(id, chain, f)| {
                let f: Vec<String> = f.iter().map(usize::to_string).collect();
                format!(
                    "component {id}: root chain [{}], f-vector ({})\n",
                    chain.join(","),
                    f.join(",")
                )
            })
            .collect(),
    })
}

/// Axiom and surface reports; the flag is true when every component passes.
pub fn verify(comps: &[(usize, Component)]) -> Result<(String, bool)> {
    let mut all_ok = true;
    let mut reports = Vec::new();
    for (id, c) in comps {
        let r = is_abstract_polytope(&c.poset);
        all_ok &= r.passed();
        let surface = if c.poset.max_rank() == 3 {
            let s = surface_report(&c.poset)?;
            let census: serde_json::Map<String, Value> =
                s.census.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            let mut notes = Vec::new();
            if let Some((&k, _)) = s.census.iter().next_back() {
                notes.push(format!("largest facets are {k}-gons"));
            }
            notes.push(match s.genus {
                Some(gen) => format!("closed orientable surface of genus {gen}"),
                None => "no genus: surface check failed or Euler characteristic is odd".into(),
            });
            json!({
                "V": s.vertices, "E": s.edges, "F": s.faces, "census": census, "euler": s.euler,
                "pseudomanifold_ok": s.pseudomanifold_ok, "orientable": s.orientable, "genus": s.genus,
                "notes": notes,
            })
        } else {
            Value::Null
        };
        reports.push(json!({
            "component": id,
            "f_vector": c.f_vector(),
            "axioms": {
                "passed": r.passed(),
                "bounded": r.bounded,
                "flag_length_ok": r.flag_length_ok,
                "diamond_ok": r.diamond_ok,
                "strongly_flag_connected": r.strongly_flag_connected,
                "simple": r.simple,
                "witnesses": r.witnesses,
            },
            "surface": surface,
        }));
    }
    let v = json!({"passed": all_ok, "components": reports});
    Ok((serde_json::to_string_pretty(&v)? + "\n", all_ok))
}

/// Cross-checks; the flag is true when every oracle agrees. Regularity is
/// reported but does not affect the flag.
pub fn oracle(input: &Input, comps: &[(usize, Component)], sample: usize) -> Result<(String, bool)> {
    let g = &input.graph;
    let p = &input.palette;
    let mono = Palette::monochrome(p.len());
    let mono_comps = build_collection(g, &mono, colorful_assoc::DEFAULT_MAX_FACES)?;
    let monochrome_ok = mono_comps.len() == 1
        && poset_isomorphic(&mono_comps[0].poset, &classic_kg_poset(g))?
        && comps.iter().all(|(_, c)| {
            c.faces
                .iter()
                .flatten()
                .all(|t| monochromize(t).len() == t.tubing().len())
        });
    let exchange_ok = equivalence_check(g, p)?;

    let mut product_ok = true;
    let mut checked = 0;
    'outer: for (_, c) in comps {
        let top = c.poset.max_rank();
        for f in 0..c.poset.len() {
            if checked >= sample {
                break 'outer;
            }
            if let Some(t) = c.template(f) {
                if c.poset.rank(f) <= top - 2 {
                    product_ok &= product_structure_check(g, p, t)?;
                    checked += 1;
                }
            }
        }
    }
    if !g.is_connected() {
        product_ok &= disconnected_product_check(g, p)?;
    }
    let mut regularity = Vec::new();
    for (id, c) in comps {
        let r = is_regular(&c.poset)?;
        regularity
            .push(json!({"component": id, "regular": r.regular, "automorphisms": r.automorphisms, "flags": r.flags}));
    }
    let v = json!({
        "monochrome_ok": monochrome_ok,
        "exchange_ok": exchange_ok,
        "product_ok": product_ok,
        "product_faces_checked": checked,
        "regularity": regularity,
    });
    Ok((
        serde_json::to_string_pretty(&v)? + "\n",
        monochrome_ok && exchange_ok && product_ok,
    ))
}

pub fn export(input: &Input, comps: &[(usize, Component)], hasse: bool) -> Result<String> {
    let mut out = String::new();
    for (id, c) in comps {
        let name = format!("component {id}");
        if hasse {
            out += &dot::hasse(c, &name);
        } else {
            out += &dot::skeleton(&input.graph, &input.palette, c, &name)?;
        }
    }
    Ok(out)
}
