//! Exact reconstruction of a polytope family in real projective 4-space that
//! deforms from hyperbolic geometry (`t > 0`) through half-pipe geometry
//! (`t = 0`) to Anti-de Sitter geometry (`t < 0`), with named checks that
//! certify its combinatorics, angles, causal types and reflection limits.
//!
//! All arithmetic is exact in ℚ(√2,√3); nothing in a verdict path uses floats.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod forms;
pub mod isometry;
pub mod linalg;
pub mod numfield;
pub mod polytope;
pub mod projective;
pub mod verify;

pub use error::{Error, Result};
pub use numfield::{Branch, BranchFunc, FieldScalar, TimeParam};
