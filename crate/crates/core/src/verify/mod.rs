//! Checks on built posets.
//!
//! * [`axioms`]: boundedness, flag length, diamond condition, strong flag
//!   connectivity and simplicity, with witnesses for every failure.
//! * [`surface`]: polygon census, Euler characteristic and genus of rank-3
//!   posets.
//! * [`iso`]: exact rank-preserving isomorphism test.
//! * [`regular`]: automorphism count and flag-transitivity.
//! * [`product`]: face-product and component-product structure checks.

pub mod axioms;
pub mod iso;
pub mod product;
pub mod regular;
pub mod surface;

pub use axioms::{
    check_bounded, check_diamond, check_flag_length, check_simple, check_strong_flag_connectivity, flags,
    is_abstract_polytope, AxiomReport,
};
pub use iso::{poset_isomorphic, ISO_MAX_FACES};
pub use product::{disconnected_product_check, product_structure_check};
pub use regular::{is_regular, RegularityReport};
pub use surface::{surface_report, SurfaceReport};
