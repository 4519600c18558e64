//! Exact arithmetic in ℚ(√2,√3) and over sign-branched rational functions of `t`.
//!
//! [`FieldScalar`] signs are decided exactly: zero from the coefficients,
//! otherwise by refining a rational enclosure of the radicals until it
//! excludes zero. [`BranchFunc`] carries one rational function per side of
//! `t = 0`, which is how `|t|` stays inside rational-function arithmetic.

mod branch;
mod poly;
mod scalar;
mod time;

pub use branch::{BranchFunc, IdentityCounterexample, IdentityReport, IDENTITY_DEGREE_BOUND, IDENTITY_SAMPLES};
pub use poly::{Poly, RatFunc};
pub use scalar::FieldScalar;
pub use time::{Branch, TimeParam};
