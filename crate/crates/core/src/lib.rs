//! Exact symbolic-numeric evaluation of the logarithmic integrals
//!
//! ```text
//! I(n,m,i) = ∫₀¹ xⁱ lnⁿ(x) lnᵐ(1−x) dx
//! ```
//!
//! as rational polynomials in the Riemann zeta values ζ(2), ζ(3), …,
//! together with the tiered binomial coefficients `(n,m)_i` that appear as
//! their constant terms, and an application to the moments, constant terms,
//! and cumulants of the Quicksort limit law.
//!
//! Every exact result has an independent numeric oracle: adaptive
//! double-exponential quadrature for the integrals, accelerated summation
//! for zeta and multiple zeta values, and direct series summation for the
//! generalized Nielsen polylogarithms.
//!
//! # Layout
//!
//! - [`algebra`]: exact scalars ([`Rational`]), the free polynomial ring in
//!   zeta generators ([`ZetaPolynomial`]), and bivariate truncated power
//!   series over a generic ring ([`TruncatedSeries`]).
//! - [`combin`]: Stirling cycle numbers, harmonic numbers, truncated zeta
//!   and zeta-star values at repeated 1's, Bell polynomials, Bernoulli
//!   numbers, Euler and Legendre polynomial coefficients.
//! - [`mzv`]: symbolic reduction of hook multiple zeta values
//!   ζ(a+1,{1}_b) and the Kaneko–Sakata index expansion.
//! - [`tiered`]: the tiered binomial coefficients `(n,m)_i`, computed by
//!   three independent routes, with their symmetry, row-sum, alternating-sum,
//!   tier-sum, and Euler-polynomial identities.
//! - [`logint`]: the normalized integrals S(n,m,i) for i ≥ 0, i = −1, and
//!   −m ≤ i ≤ −2, the Hurwitz-shifted T-values, and the variant integral
//!   with a 1/(1−x) kernel.
//! - [`nielsen`]: numeric evaluation of the generalized Nielsen
//!   polylogarithms S(n,m,i;z) and multiple polylogarithms.
//! - [`quicksort`]: exact moments and cumulants of the Quicksort limit law,
//!   constant terms by two routes, the Gumbel shift, and a deterministic
//!   Monte Carlo simulator.
//! - [`numeric`]: arbitrary-precision oracles and exact/numeric comparison
//!   reports.
//! - [`verify`]: the oracle suites wired together, one report per check.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod combin;
pub mod error;
pub mod logint;
pub mod mzv;
pub mod nielsen;
pub mod numeric;
pub mod quicksort;
pub mod tiered;
pub mod verify;

pub use algebra::rational::Rational;
pub use algebra::series::TruncatedSeries;
pub use algebra::zeta_poly::{ZetaMonomial, ZetaPolynomial};
pub use error::Error;
pub use numeric::{ComparisonReport, NumericValue};
