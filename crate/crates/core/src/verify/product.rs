//! Product structure of faces and of disconnected collections.

use std::collections::BTreeMap;

use crate::coloring::{self, Color, ColorTemplate, ColorWord, Palette};
use crate::error::{Error, Result};
use crate::graphcore::Graph;
use crate::poset::{self, build_component, classic_kg_poset, product_all, simplex_poset, FacePoset, DEFAULT_MAX_FACES};
use crate::tubing::{core_graph, Owner, Tubing};
use crate::verify::iso::poset_isomorphic;

/// The single component of `h` whose root carries `chain`/`inner` on the
/// universal owner (or, for null graphs, the universal block `block`).
/// Colors are given in the ambient palette `p`.
fn factor(h: &Graph, p: &Palette, chain: &[Color], inner: &[Color], block: &[Color]) -> Result<FacePoset> {
    let all: Vec<Color> = chain.iter().chain(inner).chain(block).copied().collect();
    let sub = p.sub_palette(&all);
    let tr = |cs: &[Color]| -> Result<Vec<Color>> { cs.iter().map(|&c| sub.color(p.name(c))).collect() };
    let mut words = BTreeMap::new();
    let comps = h.connected_components();
    if comps.len() == 1 {
        words.insert(Owner::Universal(comps[0]), ColorWord::new(tr(chain)?, tr(inner)?));
    } else {
        for c in comps {
            words.insert(Owner::Universal(c), ColorWord::default());
        }
    }
    let root = ColorTemplate::new(Tubing::empty(), words, tr(block)?);
    Ok(build_component(h, &sub, &root, DEFAULT_MAX_FACES)?.poset)
}

/// Checks that the section below `face` is the product of the colorful
/// associahedra of its cores, with each core's palette and root read off
/// the face's words, times the null-graph factor of the universal block.
pub fn product_structure_check(g: &Graph, p: &Palette, face: &ColorTemplate) -> Result<bool> {
    if let Some(why) = coloring::template_problem(g, p, face) {
        return Err(Error::InvalidTemplate(why));
    }
    let section = build_component(g, p, face, DEFAULT_MAX_FACES)?.poset;
    let mut factors = Vec::new();
    let mut universal = 0;
    for (&owner, word) in face.words() {
        let core = core_graph(g, face.tubing(), owner)?;
        let f = match owner {
            Owner::Tube(_) => factor(&core.graph, p, &word.chain[1..], &word.inner, &[])?,
            Owner::Universal(_) => {
                universal += 1;
                factor(&core.graph, p, &word.chain, &word.inner, &[])?
            }
        };
        factors.push(f);
    }
    if universal >= 2 {
        factors.push(factor(&Graph::null(universal), p, &[], &[], face.universal_block())?);
    }
    poset_isomorphic(&section, &product_all(&factors)?)
}

/// For a disconnected graph: every component splits as a product over the
/// graph's components and the null graph on the component count, and for a
/// monochrome palette the single component matches the product of classic
/// associahedra with a simplex.
pub fn disconnected_product_check(g: &Graph, p: &Palette) -> Result<bool> {
    let comps = g.connected_components();
    if comps.len() < 2 {
        return Err(Error::Unsupported("graph is connected".into()));
    }
    let roots = coloring::root_templates(g, p)?;
    for root in &roots {
        if !product_structure_check(g, p, root)? {
            return Ok(false);
        }
    }
    if p.names().len() == 1 {
        if roots.len() != 1 {
            return Ok(false);
        }
        let mut factors = comps
            .iter()
            .map(|&c| Ok(classic_kg_poset(&g.induced_subgraph(c)?)))
            .collect::<Result<Vec<_>>>()?;
        factors.push(simplex_poset(comps.len() as i32 - 1)?);
        let built = poset::build_component(g, p, &roots[0], DEFAULT_MAX_FACES)?.poset;
        return poset_isomorphic(&built, &product_all(&factors)?);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximal_face_is_a_point() {
        let g = Graph::path(3);
        let p = Palette::full(2);
        let comp = poset::build_collection(&g, &p, DEFAULT_MAX_FACES).unwrap().remove(0);
        let (v, t) = comp.vertices()[0];
        assert_eq!(comp.poset.rank(v), 0);
        assert!(product_structure_check(&g, &p, t).unwrap());
    }

    #[test]
    fn two_intervals_make_cubes() {
        let g = Graph::path(2).disjoint_union(&Graph::path(2).relabeled("x")).unwrap();
        assert!(disconnected_product_check(&g, &Palette::full(3)).unwrap());
        assert!(disconnected_product_check(&g, &Palette::monochrome(3)).unwrap());
    }
}
