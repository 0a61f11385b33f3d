//! Exact certificates for Zariski density and arithmeticity of the
//! Kontsevich–Zorich monodromy of square-tiled surfaces.
//!
//! The pipeline runs origami → cylinder decompositions → multitwist
//! matrices on the non-tautological homology → Galois-pinching and
//! three-transvection certificates. Every number is exact.

pub mod algebra;
pub mod certify;
pub mod cli;
pub mod cylinders;
pub mod error;
pub mod galois;
pub mod homology;
pub mod origami;
pub mod perm;
pub mod report;

pub use error::{Error, Result};
