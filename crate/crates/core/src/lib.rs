//! Exact spherical CR geometry on the boundary of complex hyperbolic 2-space.
//!
//! The boundary is modelled as the one-point compactification of the
//! Heisenberg group. Everything certified runs over the cyclotomic field
//! Q(ζ₂₄), which contains i, ω = e^{−iπ/3}, √2 and √3; a floating backend is
//! used only for meshes and sampling.

pub mod complexes;
pub mod data;
pub mod error;
pub mod heisenberg;
pub mod isometry;
pub mod json;
pub mod report;
pub mod scalars;
pub mod tetra;

pub use error::{Error, Result};
pub use scalars::{Approx, Cyclo, Scalar};
