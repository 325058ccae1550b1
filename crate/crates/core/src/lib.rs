//! Colorful graph associahedra.
//!
//! Given a simple graph `G` on `n` nodes and a palette of `n - 1` colors
//! (repeats allowed), this crate builds the collection of face posets whose
//! faces are *color templates*: a tubing of `G` together with an ordered
//! partition of the palette among the cores of its tubes. Each poset in the
//! collection is a simple abstract polytope of rank `n - 1`; the [`verify`]
//! module checks that claim directly, and the [`exchange`] module rebuilds
//! every poset from the graph of maximal color tubings as an independent
//! oracle.
//!
//! Module map:
//!
//! * [`graphcore`] – small simple graphs over bitmask node sets.
//! * [`tubing`] – tubes, compatibility, tubings, inner/outer tubes, cores.
//! * [`coloring`] – palettes, color words and templates, the covering rule.
//! * [`poset`] – component construction, f-vectors, products, oracles.
//! * [`verify`] – axiom suite, surface reports, isomorphism, regularity.
//! * [`exchange`] – exchange graph and the reachability poset.
//!
//! With the default `parallel` feature, sweeps over components, section
//! checks and isomorphism candidates run on rayon; disabling the feature
//! compiles the same code paths sequentially.

pub mod coloring;
pub mod error;
pub mod exchange;
pub mod graphcore;
pub mod par;
pub mod poset;
pub mod tubing;
pub mod verify;

pub use coloring::{Color, ColorTemplate, ColorWord, Palette, PaletteKind};
pub use error::{Error, Result};
pub use exchange::{ExchangeGraph, MaxColorTubing};
pub use graphcore::{Graph, NodeSet};
pub use poset::{Component, FacePoset, DEFAULT_MAX_FACES};
pub use tubing::{CoreGraph, Owner, Tube, TubeKind, Tubing};
pub use verify::{AxiomReport, RegularityReport, SurfaceReport};
