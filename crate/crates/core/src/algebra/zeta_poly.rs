//! The free commutative ring ℚ[ζ(2), ζ(3), ζ(4), …].
//!
//! Generators are never rewritten by known relations (ζ(2)² is not replaced
//! by (5/2)ζ(4)): results stay canonical and relation-independent, and any
//! cancellation observed symbolically is genuine.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use super::Ring;
use crate::error::{Error, Result};

/// Formal product ζ(2)^{e₂}·ζ(3)^{e₃}·… stored as argument → exponent.
///
/// Invariants: every key ≥ 2, every exponent ≥ 1; the empty map is the
/// constant monomial 1. Ordered by total weight Σ k·e_k, then
/// lexicographically on the (argument, exponent) list, so serialization
/// order is deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZetaMonomial {
    exponents: BTreeMap<u32, u32>,
}

impl ZetaMonomial {
    /// The constant monomial 1.
    pub fn unit() -> Self {
        ZetaMonomial::default()
    }

    /// The single generator ζ(k), k ≥ 2.
    pub fn generator(k: u32) -> Self {
        assert!(k >= 2, "zeta generator argument must be >= 2, got {k}");
        let mut exponents = BTreeMap::new();
        exponents.insert(k, 1);
        ZetaMonomial { exponents }
    }

    /// Builds from (argument, exponent) pairs, merging repeats.
    pub fn from_powers(powers: &[(u32, u32)]) -> Result<Self> {
        let mut exponents: BTreeMap<u32, u32> = BTreeMap::new();
        for &(k, e) in powers {
            if k < 2 {
                return Err(Error::domain(format!("zeta argument {k} < 2")));
            }
            if e == 0 {
                continue;
            }
            *exponents.entry(k).or_insert(0) += e;
        }
        Ok(ZetaMonomial { exponents })
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Total weight Σ k·e_k; 0 for the unit monomial.
    pub fn weight(&self) -> u32 {
        self.exponents.iter().map(|(k, e)| k * e).sum()
    }

    /// Number of generator factors Σ e_k, counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn mul(&self, rhs: &ZetaMonomial) -> ZetaMonomial {
        let mut exponents = self.exponents.clone();
        for (&k, &e) in &rhs.exponents {
            *exponents.entry(k).or_insert(0) += e;
        }
        ZetaMonomial { exponents }
    }

    /// (argument, exponent) pairs in increasing argument order.
    pub fn powers(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exponents.iter().map(|(&k, &e)| (k, e))
    }
}

impl PartialOrd for ZetaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZetaMonomial {
    /// Weight, then number of factors, then lexicographic on the powers:
    /// within one weight, single generators precede products, so ζ(4)
    /// sorts before ζ(2)².
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.exponents.iter().cmp(other.exponents.iter()))
    }
}

impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&k, &e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "zeta({k})")?;
            } else {
                write!(f, "zeta({k})^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in the zeta generators with rational coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZetaPolynomial {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaPolynomial {
    pub fn zero() -> Self {
        ZetaPolynomial::default()
    }

    pub fn one() -> Self {
        ZetaPolynomial::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(ZetaMonomial::unit(), q);
        }
        ZetaPolynomial { terms }
    }

    /// The generator ζ(k), k ≥ 2.
    pub fn zeta(k: u32) -> Self {
        ZetaPolynomial::from_monomial(ZetaMonomial::generator(k), Rational::one())
    }

    pub fn from_monomial(mono: ZetaMonomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        ZetaPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&ZetaMonomial::unit())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `Some(q)` iff every zeta monomial has cancelled.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.keys().all(|m| m.is_unit()) {
            Some(self.constant_term())
        } else {
            None
        }
    }

    /// Largest monomial weight present; 0 for constants and zero.
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    /// Terms in canonical monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&ZetaMonomial, &Rational)> {
        self.terms.iter()
    }

    fn insert_add(terms: &mut BTreeMap<ZetaMonomial, Rational>, mono: ZetaMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        ZetaPolynomial { terms }
    }

    pub fn neg(&self) -> ZetaPolynomial {
        ZetaPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Self::insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        ZetaPolynomial { terms }
    }

    pub fn scale(&self, q: &Rational) -> ZetaPolynomial {
        if q.is_zero() {
            return ZetaPolynomial::zero();
        }
        ZetaPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ZetaPolynomial {
        let mut acc = ZetaPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl From<Rational> for ZetaPolynomial {
    fn from(q: Rational) -> Self {
        ZetaPolynomial::constant(q)
    }
}

impl fmt::Display for ZetaPolynomial {
    /// Canonical text form, e.g. "7 - 4*zeta(2)" or "3/2*zeta(4) - 1/2*zeta(2)^2".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, coeff)) in self.terms.iter().enumerate() {
            let neg = coeff.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            if mono.is_unit() {
                write!(f, "{mag}")?;
            } else if mag == Rational::one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    mono: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for ZetaPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    coeff: c.to_fraction_string(),
                    mono: m.powers().collect(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZetaPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            let coeff: Rational = t.coeff.parse().map_err(serde::de::Error::custom)?;
            let mono = ZetaMonomial::from_powers(&t.mono).map_err(serde::de::Error::custom)?;
            ZetaPolynomial::insert_add(&mut terms, mono, coeff);
        }
        Ok(ZetaPolynomial { terms })
    }
}

impl Ring for ZetaPolynomial {
    fn zero() -> Self {
        ZetaPolynomial::zero()
    }

    fn one() -> Self {
        ZetaPolynomial::one()
    }

    fn is_zero(&self) -> bool {
        ZetaPolynomial::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        ZetaPolynomial::add(self, rhs)
    }

    fn neg(&self) -> Self {
        ZetaPolynomial::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        ZetaPolynomial::mul(self, rhs)
    }

    fn from_rational(q: &Rational) -> Self {
        ZetaPolynomial::constant(q.clone())
    }

    fn scale(&self, q: &Rational) -> Self {
        ZetaPolynomial::scale(self, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use proptest::prelude::*;

    fn z(k: u32) -> ZetaPolynomial {
        ZetaPolynomial::zeta(k)
    }

    #[test]
    fn monomial_products_and_weights() {
        let m = ZetaMonomial::generator(2).mul(&ZetaMonomial::generator(2));
        assert_eq!(m.weight(), 4);
        assert_eq!(m.to_string(), "zeta(2)^2");
        let n = m.mul(&ZetaMonomial::generator(3));
        assert_eq!(n.weight(), 7);
        assert_eq!(n.to_string(), "zeta(2)^2*zeta(3)");
        assert_eq!(ZetaMonomial::unit().weight(), 0);
    }

    #[test]
    fn monomial_order_is_weight_then_degree_then_lex() {
        let z4 = ZetaMonomial::generator(4);
        let z22 = ZetaMonomial::generator(2).mul(&ZetaMonomial::generator(2));
        let z3 = ZetaMonomial::generator(3);
        let z24 = ZetaMonomial::generator(2).mul(&ZetaMonomial::generator(4));
        let z33 = ZetaMonomial::generator(3).mul(&ZetaMonomial::generator(3));
        assert!(z3 < z4);
        assert!(z4 < z22, "fewer factors first within a weight");
        assert!(ZetaMonomial::unit() < z3);
        assert!(z24 < z33, "lex on powers at equal weight and degree");
    }

    #[test]
    fn ring_basics() {
        assert_eq!(z(2).mul(&z(2)).to_string(), "zeta(2)^2");
        let p = ZetaPolynomial::constant(Rational::from(7)).sub(&z(2).scale(&Rational::from(4)));
        assert_eq!(p.add(&z(2).scale(&Rational::from(4))), ZetaPolynomial::constant(Rational::from(7)));
        assert_eq!(ZetaPolynomial::zero().mul(&z(3)), ZetaPolynomial::zero());
        assert_eq!(p.constant_term(), Rational::from(7));
        assert_eq!(p.max_weight(), 2);
        assert!(p.as_rational().is_none());
        assert_eq!(
            ZetaPolynomial::constant(rat(5, 3)).as_rational(),
            Some(rat(5, 3))
        );
    }

    #[test]
    fn rendering() {
        let p = ZetaPolynomial::constant(Rational::from(7)).sub(&z(2).scale(&Rational::from(4)));
        assert_eq!(p.to_string(), "7 - 4*zeta(2)");
        let q = z(4).scale(&rat(3, 2)).sub(&z(2).pow(2).scale(&rat(1, 2)));
        assert_eq!(q.to_string(), "3/2*zeta(4) - 1/2*zeta(2)^2");
        assert_eq!(ZetaPolynomial::zero().to_string(), "0");
        assert_eq!(ZetaPolynomial::one().to_string(), "1");
        assert_eq!(z(3).neg().to_string(), "-zeta(3)");
    }

    #[test]
    fn json_round_trip() {
        let p = ZetaPolynomial::constant(Rational::from(7)).sub(&z(2).scale(&Rational::from(4)));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"terms":[{"coeff":"7/1","mono":[]},{"coeff":"-4/1","mono":[[2,1]]}]}"#);
        let back: ZetaPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly() -> impl Strategy<Value = ZetaPolynomial> {
        proptest::collection::vec(
            (2u32..6, 0u32..3, -9i64..9, 1i64..5),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = ZetaPolynomial::zero();
            for (k, e, n, d) in terms {
                let mono = ZetaMonomial::from_powers(&[(k, e)]).unwrap();
                p = p.add(&ZetaPolynomial::from_monomial(mono, rat(n, d)));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn mul_commutes(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(p.mul(&q), q.mul(&p));
        }

        #[test]
        fn mul_distributes(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        }

        #[test]
        fn json_round_trips(p in arb_poly()) {
            let s = serde_json::to_string(&p).unwrap();
            let back: ZetaPolynomial = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn constant_term_is_multiplicative_on_constants(p in arb_poly(), n in -9i64..9, d in 1i64..5) {
            let c = rat(n, d);
            prop_assert_eq!(
                p.mul(&ZetaPolynomial::constant(c.clone())).constant_term(),
                p.constant_term() * c
            );
        }
    }
}
