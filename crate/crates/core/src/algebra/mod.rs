//! Exact algebraic foundations: rational scalars, the free polynomial ring
//! in zeta generators, and truncated bivariate power series over either.

pub mod rational;
pub mod series;
pub mod zeta_poly;

pub use rational::Rational;
pub use series::TruncatedSeries;
pub use zeta_poly::{ZetaMonomial, ZetaPolynomial};

/// Commutative ring with a structure map from the rationals.
///
/// Coefficient contract for [`TruncatedSeries`] and the Bell-polynomial
/// evaluators; implemented by [`Rational`] and [`ZetaPolynomial`].
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Image of a rational scalar under ℚ → R.
    fn from_rational(q: &Rational) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, q: &Rational) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}
