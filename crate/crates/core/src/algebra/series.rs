//! Bivariate power series truncated at a fixed total degree.
//!
//! The coefficient ring is generic (rationals for generating functions of
//! tiered binomial coefficients, zeta polynomials for the hook reduction).
//! Invariants: no zero coefficient is stored, and every stored exponent pair
//! (a,b) satisfies a+b ≤ order. Multiplication silently discards terms above
//! the truncation order.

use std::collections::BTreeMap;

use super::rational::Rational;
use super::Ring;
use crate::error::{Error, Result};

/// Series Σ c_{a,b} x^a y^b over a ring, truncated at total degree `order`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R: Ring> {
    order: u32,
    coeffs: BTreeMap<(u32, u32), R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: u32) -> Self {
        TruncatedSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: u32) -> Self {
        let mut s = Self::zero(order);
        if !c.is_zero() {
            s.coeffs.insert((0, 0), c);
        }
        s
    }

    /// The monomial c·x^a y^b, truncated: zero if a+b exceeds the order.
    pub fn monomial(a: u32, b: u32, c: R, order: u32) -> Self {
        let mut s = Self::zero(order);
        if a + b <= order && !c.is_zero() {
            s.coeffs.insert((a, b), c);
        }
        s
    }

    /// The variable x (zero at order 0).
    pub fn x(order: u32) -> Self {
        Self::monomial(1, 0, R::one(), order)
    }

    /// The variable y (zero at order 0).
    pub fn y(order: u32) -> Self {
        Self::monomial(0, 1, R::one(), order)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient of x^a y^b; out of range above the truncation order.
    pub fn coeff(&self, a: u32, b: u32) -> Result<R> {
        if a + b > self.order {
            return Err(Error::OutOfRange { a, b, order: self.order });
        }
        Ok(self.coeffs.get(&(a, b)).cloned().unwrap_or_else(R::zero))
    }

    /// Stored (exponent, coefficient) pairs in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &R)> {
        self.coeffs.iter()
    }

    fn insert_add(coeffs: &mut BTreeMap<(u32, u32), R>, key: (u32, u32), c: R) {
        if c.is_zero() {
            return;
        }
        match coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch in series addition");
        let mut coeffs = self.coeffs.clone();
        for (&k, c) in &rhs.coeffs {
            Self::insert_add(&mut coeffs, k, c.clone());
        }
        TruncatedSeries { order: self.order, coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch in series multiplication");
        let mut coeffs = BTreeMap::new();
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &rhs.coeffs {
                let key = (a1 + a2, b1 + b2);
                if key.0 + key.1 > self.order {
                    continue;
                }
                Self::insert_add(&mut coeffs, key, c1.mul(c2));
            }
        }
        TruncatedSeries { order: self.order, coeffs }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.order);
        }
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c.scale(q))).collect(),
        }
    }

    /// exp of a series with zero constant term, via the finite sum
    /// Σ_{j=0}^{order} self^j/j! (terms with j > order cannot contribute).
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0, 0)?.is_zero() {
            return Err(Error::domain("series exp requires zero constant term"));
        }
        let mut acc = Self::one(self.order);
        let mut term = Self::one(self.order);
        for j in 1..=self.order {
            term = term.mul(self).scale(&Rational::new(1, i64::from(j)).expect("j >= 1"));
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// Expands ∏_j (u_j − x) / ∏_j (v_j − (x+y)) as a truncated series, the
/// common shape of all generating functions handled here; a zero
/// denominator root has no series inverse and is a domain error.
pub fn series_rational_expand(
    num_roots: &[Rational],
    den_roots: &[Rational],
    order: u32,
) -> Result<TruncatedSeries<Rational>> {
    let mut s = TruncatedSeries::one(order);
    for r in num_roots {
        let factor = TruncatedSeries::constant(r.clone(), order).sub(&TruncatedSeries::x(order));
        s = s.mul(&factor);
    }
    let xy = TruncatedSeries::<Rational>::x(order).add(&TruncatedSeries::y(order));
    for r in den_roots {
        s = s.mul(&geometric_inverse(&xy, r)?);
    }
    Ok(s)
}

/// 1/(r − u) = (1/r) Σ_k (u/r)^k for a series u with zero constant term.
fn geometric_inverse(u: &TruncatedSeries<Rational>, r: &Rational) -> Result<TruncatedSeries<Rational>> {
    if r.is_zero() {
        return Err(Error::domain("zero root in series denominator"));
    }
    let order = u.order();
    let rinv = r.recip()?;
    let scaled = u.scale(&rinv);
    let mut acc = TruncatedSeries::one(order);
    let mut pow = TruncatedSeries::one(order);
    for _ in 1..=order {
        pow = pow.mul(&scaled);
        acc = acc.add(&pow);
    }
    Ok(acc.scale(&rinv))
}

/// Univariate counterpart: coefficients 0..=order of ∏(u_j − t)/∏(v_j − t).
///
/// Used to extract Taylor coefficients of the diagonal specializations
/// f_i(x,−1) and f_i(−1,y) that certify the alternating tier sums.
pub fn rational_expand_1d(
    num_roots: &[Rational],
    den_roots: &[Rational],
    order: u32,
) -> Result<Vec<Rational>> {
    let n = order as usize + 1;
    let mut coeffs = vec![Rational::zero(); n];
    coeffs[0] = Rational::one();
    for r in num_roots {
        // multiply by (r - t)
        let mut next = vec![Rational::zero(); n];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] += &(c * r);
            if k + 1 < n {
                let shifted = -c;
                next[k + 1] += &shifted;
            }
        }
        coeffs = next;
    }
    for r in den_roots {
        if r.is_zero() {
            return Err(Error::domain("zero root in series denominator"));
        }
        // multiply by (1/r) Σ (t/r)^k, i.e. convolve with the geometric row
        let rinv = r.recip()?;
        let mut geo = Vec::with_capacity(n);
        let mut p = rinv.clone();
        for _ in 0..n {
            geo.push(p.clone());
            p *= &rinv;
        }
        let mut next = vec![Rational::zero(); n];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, g) in geo.iter().take(n - k).enumerate() {
                next[k + j] += &(c * g);
            }
        }
        coeffs = next;
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::zeta_poly::ZetaPolynomial;
    use crate::combin::binomial;
    use proptest::prelude::*;

    #[test]
    fn exp_of_zero_and_of_x() {
        let zero = TruncatedSeries::<Rational>::zero(3);
        assert_eq!(zero.exp().unwrap(), TruncatedSeries::one(3));
        let ex = TruncatedSeries::<Rational>::x(2).exp().unwrap();
        assert_eq!(ex.coeff(0, 0).unwrap(), Rational::one());
        assert_eq!(ex.coeff(1, 0).unwrap(), Rational::one());
        assert_eq!(ex.coeff(2, 0).unwrap(), rat(1, 2));
        assert_eq!(ex.coeff(0, 1).unwrap(), Rational::zero());
    }

    #[test]
    fn exp_rejects_nonzero_constant() {
        let s = TruncatedSeries::<Rational>::one(3);
        assert!(matches!(s.exp(), Err(Error::Domain(_))));
    }

    #[test]
    fn exp_over_zeta_polynomials() {
        // exp(-x y zeta(2)) at order 4 = 1 - x y zeta(2) + x^2 y^2 zeta(2)^2/2
        let s = TruncatedSeries::monomial(1, 1, ZetaPolynomial::zeta(2).neg(), 4);
        let e = s.exp().unwrap();
        assert_eq!(e.coeff(0, 0).unwrap(), ZetaPolynomial::one());
        assert_eq!(e.coeff(1, 1).unwrap(), ZetaPolynomial::zeta(2).neg());
        assert_eq!(
            e.coeff(2, 2).unwrap(),
            ZetaPolynomial::zeta(2).pow(2).scale(&rat(1, 2))
        );
        assert_eq!(e.coeff(1, 0).unwrap(), ZetaPolynomial::zero());
    }

    #[test]
    fn geometric_series_coefficients() {
        // 1/(1-x-y): coefficient of x^a y^b is binom(a+b, a)
        let s = series_rational_expand(&[], &[Rational::one()], 4).unwrap();
        assert_eq!(s.coeff(1, 1).unwrap(), Rational::from(2));
        for a in 0..=4u32 {
            for b in 0..=(4 - a) {
                assert_eq!(
                    s.coeff(a, b).unwrap(),
                    Rational::from_bigint(binomial(i64::from(a + b), i64::from(a)))
                );
            }
        }
        assert!(matches!(s.coeff(3, 2), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn zero_denominator_root_rejected() {
        assert!(series_rational_expand(&[], &[Rational::zero()], 2).is_err());
        assert!(rational_expand_1d(&[], &[Rational::zero()], 2).is_err());
    }

    #[test]
    fn first_tier_generating_function() {
        // (1-x)/((1-x-y)(2-x-y)) through total degree 2
        let s = series_rational_expand(&[Rational::one()], &[Rational::one(), Rational::from(2)], 2).unwrap();
        assert_eq!(s.coeff(0, 0).unwrap(), rat(1, 2));
        assert_eq!(s.coeff(1, 0).unwrap(), rat(1, 4));
        assert_eq!(s.coeff(0, 1).unwrap(), rat(3, 4));
        assert_eq!(s.coeff(2, 0).unwrap(), rat(1, 8));
        assert_eq!(s.coeff(1, 1).unwrap(), Rational::one());
        assert_eq!(s.coeff(0, 2).unwrap(), rat(7, 8));
    }

    #[test]
    fn second_tier_generating_function() {
        // (1-x)(2-x)/((1-x-y)(2-x-y)(3-x-y)) through total degree 1
        let s = series_rational_expand(
            &[Rational::one(), Rational::from(2)],
            &[Rational::one(), Rational::from(2), Rational::from(3)],
            1,
        )
        .unwrap();
        assert_eq!(s.coeff(0, 0).unwrap(), rat(1, 3));
        assert_eq!(s.coeff(1, 0).unwrap(), rat(1, 9));
        assert_eq!(s.coeff(0, 1).unwrap(), rat(11, 18));
    }

    #[test]
    fn univariate_expansion() {
        // 1/(1-t): all-ones coefficients
        let c = rational_expand_1d(&[], &[Rational::one()], 5).unwrap();
        assert!(c.iter().all(|v| *v == Rational::one()));
        // (1-t)/((1-t)(2-t)) = 1/(2-t): coefficients 2^{-k-1}
        let c = rational_expand_1d(&[Rational::one()], &[Rational::one(), Rational::from(2)], 4).unwrap();
        for (k, v) in c.iter().enumerate() {
            assert_eq!(v, &rat(1, 1 << (k + 1)));
        }
    }

    fn arb_nilpotent_series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
        proptest::collection::vec((-6i64..6, 1i64..5), 5).prop_map(|cs| {
            let mut s = TruncatedSeries::zero(4);
            let keys = [(1u32, 0u32), (0, 1), (1, 1), (2, 0), (0, 2)];
            for ((n, d), &(a, b)) in cs.into_iter().zip(keys.iter()) {
                s = s.add(&TruncatedSeries::monomial(a, b, rat(n, d), 4));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn exp_inverse(s in arb_nilpotent_series()) {
            let prod = s.exp().unwrap().mul(&s.neg().exp().unwrap());
            prop_assert_eq!(prod, TruncatedSeries::one(4));
        }

        #[test]
        fn mul_commutes(s in arb_nilpotent_series(), t in arb_nilpotent_series()) {
            prop_assert_eq!(s.mul(&t), t.mul(&s));
        }
    }
}
