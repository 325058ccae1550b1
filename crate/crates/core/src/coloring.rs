//! Palettes, color words and color templates.
//!
//! A color template is a tubing together with a partition of the palette
//! among its *owners*: every tube of the tubing, plus one universal owner per
//! component of the graph that is not itself a tube. The colors handed to an
//! owner form a [`ColorWord`]:
//!
//! * `chain` is ordered. For a tube its first entry is the tube's own color;
//!   the remaining `κ - 1` entries are reserved for the outer tubes of the
//!   owner's core, largest outer tube first. Universal owners are uncolored,
//!   so their chain only has the `κ - 1` outer entries.
//! * `inner` is an unordered multiset of `|core| - κ` colors for the inner
//!   tubes of the core.
//!
//! For a graph with `m > 1` components the template also keeps a
//! *universal block* of colors reserved for component tubes.
//!
//! Templates are ordered by a single-tube covering rule ([`covers`] checks
//! it, [`enumerate_children`] generates it). When a tube `t` is added, the
//! smallest owner `t*` containing it gives up colors: the first `k` chain
//! colors stay with `t*` (where `k` is the size of its new word), the rest of
//! the chain moves to `t`, the inner multiset is split freely, and inside
//! each new word the colors keep their relative order (chain order first,
//! inner colors after all chain colors).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graphcore::{Graph, NodeSet};
use crate::tubing::{self, core_graph_unchecked, Owner, Tube, Tubing};

/// Index of a distinct color name in a [`Palette`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Color(pub u16);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PaletteKind {
    /// All colors distinct.
    Full,
    /// A single repeated color.
    Monochrome,
    Mixed,
}

/// A multiset of colors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Palette {
    names: Vec<String>,
    colors: Vec<Color>,
}

impl Palette {
    pub fn new<I, S>(labels: I) -> Palette
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_string()).collect();
        let names: Vec<String> = labels.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let mut colors: Vec<Color> = labels
            .iter()
            .map(|l| Color(names.binary_search(l).unwrap() as u16))
            .collect();
        colors.sort();
        Palette { names, colors }
    }

    /// `size` distinct colors `c0, c1, ...`.
    pub fn full(size: usize) -> Palette {
        Palette::new((0..size).map(|i| format!("c{i}")))
    }

    /// `size` copies of one color.
    pub fn monochrome(size: usize) -> Palette {
        Palette::new(std::iter::repeat_n("c0", size))
    }

    /// Checks that the palette has `n - 1` colors for `g`.
    pub fn check_for(&self, g: &Graph) -> Result<()> {
        let expected = g.node_count().saturating_sub(1);
        if self.len() != expected || g.node_count() == 0 {
            return Err(Error::PaletteSize {
                nodes: g.node_count(),
                got: self.len(),
                expected,
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// The colors as a sorted multiset.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: Color) -> &str {
        &self.names[c.0 as usize]
    }

    pub fn color(&self, name: &str) -> Result<Color> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map(|i| Color(i as u16))
            .map_err(|_| Error::InvalidTemplate(format!("color `{name}` is not in the palette")))
    }

    pub fn kind(&self) -> PaletteKind {
        if self.colors.windows(2).all(|w| w[0] != w[1]) {
            PaletteKind::Full
        } else if self.names.len() == 1 {
            PaletteKind::Monochrome
        } else {
            PaletteKind::Mixed
        }
    }

    /// The palette on a sub-multiset of these colors, keeping the names.
    pub fn sub_palette(&self, colors: &[Color]) -> Palette {
        Palette::new(colors.iter().map(|&c| self.name(c)))
    }

    /// Color labels of the palette, sorted.
    pub fn labels(&self) -> Vec<&str> {
        self.colors.iter().map(|&c| self.name(c)).collect()
    }
}

/// The colors owned by one tube or universal owner.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ColorWord {
    pub chain: Vec<Color>,
    /// Sorted.
    pub inner: Vec<Color>,
}

impl ColorWord {
    pub fn new(chain: Vec<Color>, mut inner: Vec<Color>) -> ColorWord {
        inner.sort();
        ColorWord { chain, inner }
    }

    pub fn from_labels(p: &Palette, chain: &[&str], inner: &[&str]) -> Result<ColorWord> {
        let chain = chain.iter().map(|c| p.color(c)).collect::<Result<_>>()?;
        let inner = inner.iter().map(|c| p.color(c)).collect::<Result<_>>()?;
        Ok(ColorWord::new(chain, inner))
    }

    pub fn len(&self) -> usize {
        self.chain.len() + self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The tube's own color (first chain entry) when the owner is a tube.
    pub fn first(&self) -> Option<Color> {
        self.chain.first().copied()
    }
}

/// A tubing plus a partition of the palette among its owners.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorTemplate {
    tubing: Tubing,
    words: BTreeMap<Owner, ColorWord>,
    universal_block: Vec<Color>,
}

impl ColorTemplate {
    /// Assembles a template without validating it; see [`validate_template`].
    pub fn new(tubing: Tubing, words: BTreeMap<Owner, ColorWord>, mut universal_block: Vec<Color>) -> ColorTemplate {
        universal_block.sort();
        let words = words
            .into_iter()
            .map(|(o, w)| (o, ColorWord::new(w.chain, w.inner)))
            .collect();
        ColorTemplate {
            tubing,
            words,
            universal_block,
        }
    }

    pub fn tubing(&self) -> &Tubing {
        &self.tubing
    }

    pub fn words(&self) -> &BTreeMap<Owner, ColorWord> {
        &self.words
    }

    pub fn word(&self, owner: Owner) -> Option<&ColorWord> {
        self.words.get(&owner)
    }

    pub fn universal_block(&self) -> &[Color] {
        &self.universal_block
    }

    /// Visible color of each tube.
    pub fn tube_colors(&self) -> Vec<(Tube, Color)> {
        self.words
            .iter()
            .filter_map(|(o, w)| match o {
                Owner::Tube(t) => w.first().map(|c| (*t, c)),
                Owner::Universal(_) => None,
            })
            .collect()
    }

    /// Chain of the universal owner of the component containing node 0
    /// (the whole graph when connected).
    pub fn root_chain(&self) -> Vec<Color> {
        self.words
            .iter()
            .find(|(o, _)| o.is_universal())
            .map(|(_, w)| w.chain.clone())
            .unwrap_or_default()
    }

    /// Canonical rendering: tubes sorted by (size, labels), each `{a,b}:red`.
    pub fn tubing_string(&self, g: &Graph, p: &Palette) -> String {
        let parts: Vec<String> = self
            .tube_colors()
            .into_iter()
            .map(|(t, c)| format!("{}:{}", g.fmt_set(t.nodes()), p.name(c)))
            .collect();
        parts.join(" ")
    }

    /// Full human-readable form including every word.
    pub fn describe(&self, g: &Graph, p: &Palette) -> String {
        let names = |cs: &[Color]| cs.iter().map(|&c| p.name(c)).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        for (o, w) in &self.words {
            let owner = match o {
                Owner::Tube(t) => g.fmt_set(t.nodes()),
                Owner::Universal(s) => format!("U{}", g.fmt_set(*s)),
            };
            parts.push(format!("{owner}:({})|{{{}}}", names(&w.chain), names(&w.inner)));
        }
        if !self.universal_block.is_empty() {
            parts.push(format!("block{{{}}}", names(&self.universal_block)));
        }
        parts.join(" ")
    }
}

impl fmt::Debug for ColorTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColorTemplate")
            .field("tubing", &self.tubing)
            .field("words", &self.words)
            .field("universal_block", &self.universal_block)
            .finish()
    }
}

// ---------------------------------------------------------------------------
// Multiset helpers. Multisets are sorted `Vec<Color>`.

fn distinct(ms: &[Color]) -> Vec<Color> {
    let mut v = ms.to_vec();
    v.dedup();
    v
}

fn remove_one(ms: &[Color], c: Color) -> Option<Vec<Color>> {
    let i = ms.iter().position(|&x| x == c)?;
    let mut v = ms.to_vec();
    v.remove(i);
    Some(v)
}

fn multiset_minus(ms: &[Color], sub: &[Color]) -> Option<Vec<Color>> {
    sub.iter().try_fold(ms.to_vec(), |acc, &c| remove_one(&acc, c))
}

/// Every distinct sub-multiset of size `k`, paired with its complement.
pub(crate) fn sub_multisets(ms: &[Color], k: usize) -> Vec<(Vec<Color>, Vec<Color>)> {
    let groups: Vec<(Color, usize)> = distinct(ms)
        .into_iter()
        .map(|c| (c, ms.iter().filter(|&&x| x == c).count()))
        .collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        groups: &[(Color, usize)],
        k: usize,
        pick: &mut Vec<Color>,
        ms: &[Color],
        out: &mut Vec<(Vec<Color>, Vec<Color>)>,
    ) {
        let Some(&(c, n)) = groups.first() else {
            if k == 0 {
                let rest = multiset_minus(ms, pick).expect("sub-multiset");
                out.push((pick.clone(), rest));
            }
            return;
        };
        let room: usize = groups[1..].iter().map(|g| g.1).sum();
        for take in (0..=n.min(k)).rev() {
            if k - take > room {
                continue;
            }
            pick.extend(std::iter::repeat_n(c, take));
            rec(&groups[1..], k - take, pick, ms, out);
            pick.truncate(pick.len() - take);
        }
    }
    if k <= ms.len() {
        rec(&groups, k, &mut pick, ms, &mut out);
    }
    out
}

/// Every distinct sequence of length `k` drawn from the multiset, paired
/// with the unused remainder.
pub(crate) fn sequences(ms: &[Color], k: usize) -> Vec<(Vec<Color>, Vec<Color>)> {
    if k == 0 {
        return vec![(Vec::new(), ms.to_vec())];
    }
    let mut out = Vec::new();
    for c in distinct(ms) {
        let rest = remove_one(ms, c).unwrap();
        for (mut seq, rem) in sequences(&rest, k - 1) {
            seq.insert(0, c);
            out.push((seq, rem));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Word shapes.

/// `(chain length, inner size)` of `owner` in `tubing`.
pub fn word_shape(g: &Graph, tubing: &Tubing, owner: Owner) -> Result<(usize, usize)> {
    let core = core_graph_unchecked(g, tubing, owner);
    let size = core.graph.node_count();
    let kappa = core.graph.vertex_connectivity();
    if kappa == 0 {
        return Err(Error::Structure(format!(
            "core of {} is empty or disconnected",
            g.fmt_set(owner.nodes())
        )));
    }
    let inner = size - kappa;
    let chain = match owner {
        Owner::Tube(_) => kappa,
        Owner::Universal(_) => kappa - 1,
    };
    Ok((chain, inner))
}

fn component_count_in(g: &Graph, tubing: &Tubing) -> (usize, usize) {
    let comps = g.connected_components();
    let present = if comps.len() > 1 {
        comps
            .iter()
            .filter(|c| tubing.contains(Tube::new_unchecked(**c)))
            .count()
    } else {
        0
    };
    (comps.len(), present)
}

fn block_size(g: &Graph, tubing: &Tubing) -> usize {
    let (m, present) = component_count_in(g, tubing);
    (m - 1).saturating_sub(present)
}

/// Smallest tube of `tubing` strictly containing `t`, else the universal
/// owner of `t`'s component.
pub fn smallest_owner_containing(g: &Graph, tubing: &Tubing, t: Tube) -> Owner {
    tubing
        .iter()
        .filter(|u| t.nodes().is_proper_subset(u.nodes()))
        .min_by_key(|u| u.len())
        .map(Owner::Tube)
        .unwrap_or_else(|| {
            let comp = g
                .connected_components()
                .into_iter()
                .find(|c| t.nodes().is_subset(*c))
                .expect("tube lies in a component");
            Owner::Universal(comp)
        })
}

fn is_component(g: &Graph, s: NodeSet) -> bool {
    let comps = g.connected_components();
    comps.len() > 1 && comps.contains(&s)
}

// ---------------------------------------------------------------------------
// Roots and validation.

/// Templates of the empty tubing, one per component poset.
///
/// For a connected graph there is one root per distinct sequence of `κ - 1`
/// palette colors (the outer chain of the universal word). For a disconnected
/// graph the palette is first split into a universal block of `m - 1`
/// colors and one multiset of `|G_i| - 1` colors per component; each
/// component then picks its own outer chain.
pub fn root_templates(g: &Graph, p: &Palette) -> Result<Vec<ColorTemplate>> {
    p.check_for(g)?;
    let comps = g.connected_components();
    let empty = Tubing::empty();
    let shapes = comps
        .iter()
        .map(|&c| word_shape(g, &empty, Owner::Universal(c)))
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::new();
    for (block, rest) in sub_multisets(p.colors(), comps.len() - 1) {
        let mut partial: Vec<(BTreeMap<Owner, ColorWord>, Vec<Color>)> = vec![(BTreeMap::new(), rest)];
        for (&comp, &(chain_len, inner_len)) in comps.iter().zip(&shapes) {
            let mut next = Vec::new();
            for (words, rest) in &partial {
                for (sub, rest2) in sub_multisets(rest, chain_len + inner_len) {
                    for (chain, inner) in sequences(&sub, chain_len) {
                        let mut w = words.clone();
                        w.insert(Owner::Universal(comp), ColorWord::new(chain, inner));
                        next.push((w, rest2.clone()));
                    }
                }
            }
            partial = next;
        }
        for (words, rest) in partial {
            debug_assert!(rest.is_empty());
            out.push(ColorTemplate::new(Tubing::empty(), words, block.clone()));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Standalone validity of a template for `(g, p)`.
pub fn validate_template(g: &Graph, p: &Palette, c: &ColorTemplate) -> bool {
    template_problem(g, p, c).is_none()
}

/// First reason a template is invalid, if any.
pub fn template_problem(g: &Graph, p: &Palette, c: &ColorTemplate) -> Option<String> {
    if p.check_for(g).is_err() {
        return Some("palette size does not match the graph".into());
    }
    if let Err(e) = Tubing::new(g, c.tubing.iter()) {
        return Some(e.to_string());
    }
    let owners = tubing::owners(g, &c.tubing);
    let keys: Vec<Owner> = c.words.keys().copied().collect();
    let mut expected = owners.clone();
    expected.sort();
    if keys != expected {
        return Some("word owners do not match the tubing".into());
    }
    for owner in owners {
        let (chain, inner) = match word_shape(g, &c.tubing, owner) {
            Ok(s) => s,
            Err(e) => return Some(e.to_string()),
        };
        let w = &c.words[&owner];
        if w.chain.len() != chain || w.inner.len() != inner {
            return Some(format!(
                "word of {} has shape ({}, {}), expected ({chain}, {inner})",
                g.fmt_set(owner.nodes()),
                w.chain.len(),
                w.inner.len()
            ));
        }
    }
    if c.universal_block.len() != block_size(g, &c.tubing) {
        return Some("universal block has the wrong size".into());
    }
    let mut all: Vec<Color> = c
        .words
        .values()
        .flat_map(|w| w.chain.iter().chain(&w.inner).copied())
        .chain(c.universal_block.iter().copied())
        .collect();
    all.sort();
    if all != p.colors() {
        return Some("colors do not partition the palette".into());
    }
    None
}

// ---------------------------------------------------------------------------
// Covering relation, generative side.

/// Every ways to fill a word with `slots` chain positions from old chain
/// colors `old_chain` (kept in order) and free colors `free`.
fn fill_word(old_chain: &[Color], free: &[Color], slots: usize) -> Vec<ColorWord> {
    if old_chain.len() >= slots {
        let mut inner = old_chain[slots..].to_vec();
        inner.extend_from_slice(free);
        return vec![ColorWord::new(old_chain[..slots].to_vec(), inner)];
    }
    sequences(free, slots - old_chain.len())
        .into_iter()
        .map(|(seq, rest)| {
            let mut chain = old_chain.to_vec();
            chain.extend(seq);
            ColorWord::new(chain, rest)
        })
        .collect()
}

/// All templates covered by `parent`, i.e. obtained by adding one tube and
/// redistributing colors; canonical order, no duplicates.
///
/// `parent` must be valid for `g`.
pub fn enumerate_children(g: &Graph, parent: &ColorTemplate) -> Vec<ColorTemplate> {
    let mut out = BTreeSet::new();
    for t in tubing::enumerate_tubes(g) {
        if !parent.tubing.accepts(g, t) {
            continue;
        }
        if is_component(g, t.nodes()) {
            add_component_children(parent, t, &mut out);
        } else {
            add_tube_children(g, parent, t, &mut out);
        }
    }
    out.into_iter().collect()
}

fn add_component_children(parent: &ColorTemplate, t: Tube, out: &mut BTreeSet<ColorTemplate>) {
    let sentinel = Owner::Universal(t.nodes());
    let word = &parent.words[&sentinel];
    for u in distinct(&parent.universal_block) {
        let mut words = parent.words.clone();
        words.remove(&sentinel);
        let mut chain = vec![u];
        chain.extend_from_slice(&word.chain);
        words.insert(Owner::Tube(t), ColorWord::new(chain, word.inner.clone()));
        let block = remove_one(&parent.universal_block, u).unwrap();
        out.insert(ColorTemplate {
            tubing: parent.tubing.with(t),
            words,
            universal_block: block,
        });
    }
}

fn add_tube_children(g: &Graph, parent: &ColorTemplate, t: Tube, out: &mut BTreeSet<ColorTemplate>) {
    let tubing = parent.tubing.with(t);
    let star = smallest_owner_containing(g, &parent.tubing, t);
    let (Ok((star_chain, star_inner)), Ok((t_chain, t_inner))) =
        (word_shape(g, &tubing, star), word_shape(g, &tubing, Owner::Tube(t)))
    else {
        return;
    };
    let old = &parent.words[&star];
    let k = star_chain + star_inner;
    let j = k.min(old.chain.len());
    let moved = old.chain.len() - j;
    let (Some(star_free), Some(t_free)) = (k.checked_sub(j), (t_chain + t_inner).checked_sub(moved)) else {
        return;
    };
    if star_free + t_free != old.inner.len() {
        return;
    }
    for (to_star, to_t) in sub_multisets(&old.inner, star_free) {
        for ws in fill_word(&old.chain[..j], &to_star, star_chain) {
            for wt in fill_word(&old.chain[j..], &to_t, t_chain) {
                let mut words = parent.words.clone();
                words.insert(star, ws.clone());
                words.insert(Owner::Tube(t), wt);
                out.insert(ColorTemplate {
                    tubing: tubing.clone(),
                    words,
                    universal_block: parent.universal_block.clone(),
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Covering relation, declarative side.

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Star,
    Added,
}

const INNER: usize = usize::MAX;

/// Whether some assignment of the old word's color occurrences to the slots
/// of the two new words satisfies the redistribution rule.
fn split_admissible(old: &ColorWord, j: usize, star: &ColorWord, added: &ColorWord) -> bool {
    // (color, old position, forced side)
    let olds: Vec<(Color, usize, Option<Side>)> = old
        .chain
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i, Some(if i < j { Side::Star } else { Side::Added })))
        .chain(old.inner.iter().map(|&c| (c, INNER, None)))
        .collect();
    // (color, side, new position)
    let mut slots: Vec<(Color, Side, usize)> = Vec::new();
    for (side, w) in [(Side::Star, star), (Side::Added, added)] {
        slots.extend(w.chain.iter().enumerate().map(|(i, &c)| (c, side, i)));
        slots.extend(w.inner.iter().map(|&c| (c, side, INNER)));
    }
    if olds.len() != slots.len() {
        return false;
    }
    let mut used = vec![false; slots.len()];
    let mut assign = vec![0usize; olds.len()];
    search_assignment(&olds, &slots, 0, &mut used, &mut assign)
}

fn search_assignment(
    olds: &[(Color, usize, Option<Side>)],
    slots: &[(Color, Side, usize)],
    k: usize,
    used: &mut [bool],
    assign: &mut [usize],
) -> bool {
    if k == olds.len() {
        return true;
    }
    let (color, old_pos, forced) = olds[k];
    for s in 0..slots.len() {
        let (c, side, new_pos) = slots[s];
        if used[s] || c != color || forced.is_some_and(|f| f != side) {
            continue;
        }
        // Earlier occurrences have smaller or equal old positions.
        let monotone = (0..k).all(|i| {
            let (_, prev_old, _) = olds[i];
            let (_, prev_side, prev_new) = slots[assign[i]];
            prev_side != side || prev_old == old_pos || prev_new <= new_pos
        });
        if !monotone {
            continue;
        }
        used[s] = true;
        assign[k] = s;
        if search_assignment(olds, slots, k + 1, used, assign) {
            return true;
        }
        used[s] = false;
    }
    false
}

/// Whether `child` is covered by `parent` (one more tube, colors
/// redistributed by the covering rule).
///
/// Both templates must be valid for `(g, p)`; otherwise an input error is
/// returned. A tube-count difference other than one yields `Ok(false)`.
pub fn covers(g: &Graph, p: &Palette, parent: &ColorTemplate, child: &ColorTemplate) -> Result<bool> {
    for (name, c) in [("parent", parent), ("child", child)] {
        if let Some(why) = template_problem(g, p, c) {
            return Err(Error::InvalidTemplate(format!("{name}: {why}")));
        }
    }
    if child.tubing.len() != parent.tubing.len() + 1 || !parent.tubing.is_subset(&child.tubing) {
        return Ok(false);
    }
    let t = child.tubing.difference(&parent.tubing).next().expect("one extra tube");

    if is_component(g, t.nodes()) {
        let sentinel = Owner::Universal(t.nodes());
        let others_equal = child
            .words
            .iter()
            .filter(|(o, _)| **o != Owner::Tube(t))
            .all(|(o, w)| parent.words.get(o) == Some(w));
        let old = &parent.words[&sentinel];
        let new = &child.words[&Owner::Tube(t)];
        let ok = others_equal
            && new.chain[1..] == old.chain[..]
            && new.inner == old.inner
            && remove_one(&parent.universal_block, new.chain[0]).as_deref() == Some(&child.universal_block[..]);
        return Ok(ok);
    }

    if parent.universal_block != child.universal_block {
        return Ok(false);
    }
    let star = smallest_owner_containing(g, &parent.tubing, t);
    let untouched = child
        .words
        .iter()
        .filter(|(o, _)| **o != star && **o != Owner::Tube(t))
        .all(|(o, w)| parent.words.get(o) == Some(w));
    if !untouched {
        return Ok(false);
    }
    let old = &parent.words[&star];
    let new_star = &child.words[&star];
    let new_t = &child.words[&Owner::Tube(t)];
    let j = new_star.len().min(old.chain.len());
    Ok(split_admissible(old, j, new_star, new_t))
}

/// The underlying tubing with colors forgotten.
pub fn monochromize(c: &ColorTemplate) -> Tubing {
    c.tubing.clone()
}

/// Every valid template for `(g, p)`, by brute-force distribution of the
/// palette over every tubing. Independent of the covering rule.
pub fn enumerate_all_templates(g: &Graph, p: &Palette) -> Result<Vec<ColorTemplate>> {
    p.check_for(g)?;
    let mut out = Vec::new();
    for tubing in tubing::enumerate_tubings(g) {
        let owners = tubing::owners(g, &tubing);
        let shapes = owners
            .iter()
            .map(|&o| word_shape(g, &tubing, o))
            .collect::<Result<Vec<_>>>()?;
        for (block, rest) in sub_multisets(p.colors(), block_size(g, &tubing)) {
            let mut partial: Vec<(BTreeMap<Owner, ColorWord>, Vec<Color>)> = vec![(BTreeMap::new(), rest)];
            for (&owner, &(chain_len, inner_len)) in owners.iter().zip(&shapes) {
                let mut next = Vec::new();
                for (words, rest) in &partial {
                    for (sub, rest2) in sub_multisets(rest, chain_len + inner_len) {
                        for (chain, inner) in sequences(&sub, chain_len) {
                            let mut w = words.clone();
                            w.insert(owner, ColorWord::new(chain, inner));
                            next.push((w, rest2.clone()));
                        }
                    }
                }
                partial = next;
            }
            out.extend(
                partial
                    .into_iter()
                    .map(|(words, _)| ColorTemplate::new(tubing.clone(), words, block.clone())),
            );
        }
    }
    out.sort();
    Ok(out)
}
