//! Arbitrary-precision numeric backends and cross-check plumbing.
//!
//! Everything exact in this crate is double-checked against floating-point
//! oracles that share as little machinery as possible with the symbolic
//! side: direct Euler-Maclaurin zeta sums, convolution-accelerated multiple
//! zeta sums, and tanh-sinh quadrature of the defining integrals.

pub mod compare;
pub mod eval;
pub mod mzv_num;
pub mod quad;
pub mod real;
pub mod zeta_num;

pub use compare::{compare, compare_numeric, compare_residual, ComparisonReport};
pub use eval::eval_zeta_polynomial;
pub use mzv_num::mzv_numeric;
pub use quad::{quad_entropy, quad_logint, quad_nielsen, quad_variant};
pub use real::{NumericValue, RealCtx};
pub use zeta_num::zeta_numeric;
