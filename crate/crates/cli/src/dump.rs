//! Serialized components.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use colorful_assoc::{ColorTemplate, ColorWord, Component, FacePoset, Graph, Owner, Palette, Tube, Tubing};

use crate::spec::GraphSpecFile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredTube {
    pub nodes: Vec<String>,
    pub color: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDump {
    pub owner: Vec<String>,
    pub universal: bool,
    pub chain: Vec<String>,
    pub inner: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateDump {
    pub tubing: Vec<ColoredTube>,
    pub words: Vec<WordDump>,
    pub universal_block: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDump {
    pub id: usize,
    pub rank: i32,
    #[serde(flatten)]
    pub template: Option<TemplateDump>,
}

/// One component with its graph and palette, enough to rebuild it exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDump {
    pub component: usize,
    pub graph: GraphSpecFile,
    pub faces: Vec<FaceDump>,
    pub covers: Vec<(usize, usize)>,
}

fn labels(g: &Graph, s: colorful_assoc::NodeSet) -> Vec<String> {
    s.iter().map(|i| g.label(i).to_string()).collect()
}

fn names(p: &Palette, cs: &[colorful_assoc::Color]) -> Vec<String> {
    cs.iter().map(|&c| p.name(c).to_string()).collect()
}

fn template_dump(g: &Graph, p: &Palette, t: &ColorTemplate) -> TemplateDump {
    TemplateDump {
        tubing: t
            .tube_colors()
            .into_iter()
            .map(|(tube, c)| ColoredTube {
                nodes: labels(g, tube.nodes()),
                color: p.name(c).to_string(),
            })
            .collect(),
        words: t
            .words()
            .iter()
            .map(|(o, w)| WordDump {
                owner: labels(g, o.nodes()),
                universal: o.is_universal(),
                chain: names(p, &w.chain),
                inner: names(p, &w.inner),
            })
            .collect(),
        universal_block: names(p, t.universal_block()),
    }
}

impl PosetDump {
    pub fn new(g: &Graph, p: &Palette, id: usize, c: &Component) -> PosetDump {
        PosetDump {
            component: id,
            graph: GraphSpecFile {
                nodes: g.labels().to_vec(),
                edges: g
                    .edges()
                    .map(|(a, b)| (g.label(a).to_string(), g.label(b).to_string()))
                    .collect(),
                palette: Some(p.labels().into_iter().map(str::to_string).collect()),
            },
            faces: c
                .faces
                .iter()
                .enumerate()
                .map(|(f, t)| FaceDump {
                    id: f,
                    rank: c.poset.rank(f),
                    template: t.as_ref().map(|t| template_dump(g, p, t)),
                })
                .collect(),
            covers: c.poset.covers(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }

    pub fn from_json(text: &str) -> Result<PosetDump> {
        serde_json::from_str(text).context("not a poset dump")
    }

    /// Rebuilds the graph, palette and component.
    pub fn load(&self) -> Result<(Graph, Palette, Component)> {
        let g = self.graph.graph()?;
        let p = self.graph.palette(&g, None)?;
        let mut faces = Vec::with_capacity(self.faces.len());
        let mut rank = Vec::with_capacity(self.faces.len());
        for (i, f) in self.faces.iter().enumerate() {
            if f.id != i {
                bail!("face ids must be 0, 1, 2, ... in order");
            }
            rank.push(f.rank);
            faces.push(match &f.template {
                Some(t) => Some(load_template(&g, &p, t)?),
                None => None,
            });
        }
        let n = faces.len();
        if let Some(&(a, b)) = self.covers.iter().find(|&&(a, b)| a >= n || b >= n) {
            bail!("cover ({a}, {b}) names a missing face");
        }
        let poset = FacePoset::from_covers(rank, self.covers.iter().copied());
        let top = poset.greatest().ok_or_else(|| anyhow!("dump has no greatest face"))?;
        let root = faces[top]
            .clone()
            .ok_or_else(|| anyhow!("greatest face has no template"))?;
        Ok((g, p, Component { root, faces, poset }))
    }
}

fn load_template(g: &Graph, p: &Palette, t: &TemplateDump) -> Result<ColorTemplate> {
    let set = |ls: &[String]| g.node_set(ls.iter().map(String::as_str));
    let colors = |ls: &[String]| {
        ls.iter()
            .map(|c| p.color(c))
            .collect::<colorful_assoc::Result<Vec<_>>>()
    };
    let mut tubes = Vec::new();
    for ct in &t.tubing {
        tubes.push(Tube::new(g, set(&ct.nodes)?)?);
    }
    let tubing = Tubing::new(g, tubes)?;
    let mut words = BTreeMap::new();
    for w in &t.words {
        let nodes = set(&w.owner)?;
        let owner = if w.universal {
            Owner::Universal(nodes)
        } else {
            Owner::Tube(Tube::new(g, nodes)?)
        };
        words.insert(owner, ColorWord::new(colors(&w.chain)?, colors(&w.inner)?));
    }
    let template = ColorTemplate::new(tubing, words, colors(&t.universal_block)?);
    if let Some(why) = colorful_assoc::coloring::template_problem(g, p, &template) {
        bail!("invalid template in dump: {why}");
    }
    for ct in &t.tubing {
        let tube = Tube::new(g, set(&ct.nodes)?)?;
        let shown = template.word(Owner::Tube(tube)).and_then(ColorWord::first);
        if shown != Some(p.color(&ct.color)?) {
            bail!("tube color of {:?} disagrees with its word", ct.nodes);
        }
    }
    Ok(template)
}

#[cfg(test)]
mod tests {
    use super::*;
    use colorful_assoc::poset::build_collection;
    use colorful_assoc::DEFAULT_MAX_FACES;

    fn round_trip(g: &Graph, p: &Palette) {
        for (i, c) in build_collection(g, p, DEFAULT_MAX_FACES)
            .unwrap()
            .into_iter()
            .enumerate()
        {
            let d = PosetDump::new(g, p, i, &c);
            let back = PosetDump::from_json(&d.to_json()).unwrap();
            assert_eq!(back, d);
            let (g2, p2, c2) = back.load().unwrap();
            assert_eq!(&g2, g);
            assert_eq!(&p2, p);
            assert_eq!(c2, c);
        }
    }

    #[test]
    fn dumps_round_trip() {
        round_trip(&Graph::path(3), &Palette::new(["red", "blue"]));
        round_trip(&Graph::cycle(4), &Palette::full(3));
        round_trip(&Graph::star(3), &Palette::new(["x", "x", "y"]));
        round_trip(&Graph::null(3), &Palette::full(2));
        round_trip(&Graph::path(1), &Palette::full(0));
    }

    #[test]
    fn tampered_dump_is_rejected() {
        let g = Graph::path(3);
        let p = Palette::full(2);
        let c = build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap().remove(0);
        let mut d = PosetDump::new(&g, &p, 0, &c);
        let face = d.faces.iter_mut().find(|f| f.rank == 0).unwrap();
        let tube = &mut face.template.as_mut().unwrap().tubing[0];
        tube.color = if tube.color == "c0" { "c1".into() } else { "c0".into() };
        let text = d.to_json();
        assert!(PosetDump::from_json(&text).unwrap().load().is_err());
    }
}
