//! Cellular resolutions of cointerval edge ideals.
//!
//! A `d`-uniform hypergraph `H` on integer vertices determines a polyhedral
//! complex [`complex::build_complex`] whose cells are block tuples
//! `σ_1 < … < σ_d` all of whose transversals are edges. When `H` is
//! cointerval the complex supports a minimal linear resolution of the edge
//! ideal of `H`; [`resolution`] verifies this and extracts Betti tables.

pub mod casestudy;
pub mod cli;
pub mod complex;
pub mod decomposition;
pub mod error;
pub mod homology;
pub mod hypergraph;
pub mod mixedsub;
mod perm;
pub mod resolution;

pub use error::{Error, Result};
