//! Graph specification files.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use colorful_assoc::{Graph, Palette};

/// `{"nodes": [...], "edges": [[u, v], ...], "palette": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpecFile {
    pub nodes: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
    #[serde(default)]
    pub palette: Option<Vec<String>>,
}

impl GraphSpecFile {
    pub fn graph(&self) -> Result<Graph> {
        let edges = self.edges.iter().map(|(a, b)| (a.as_str(), b.as_str()));
        Ok(Graph::new(self.nodes.iter().map(String::as_str), edges)?)
    }

    /// The palette, with `over` (comma-separated) taking precedence.
    pub fn palette(&self, g: &Graph, over: Option<&str>) -> Result<Palette> {
        let labels: Vec<String> = match (over, &self.palette) {
            (Some(s), _) => s
                .split(',')
                .map(|c| c.trim().to_string())
                .filter(|c| !c.is_empty())
                .collect(),
            (None, Some(p)) => p.clone(),
            (None, None) => bail!("no palette given in the file or with --palette"),
        };
        let p = Palette::new(&labels);
        p.check_for(g)?;
        Ok(p)
    }
}

pub fn parse(text: &str) -> Result<GraphSpecFile> {
    serde_json::from_str(text).context("not a graph specification")
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}
