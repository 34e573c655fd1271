//! Exact evaluation of the logarithmic integrals
//!
//! ```text
//! I(n,m,i) = ∫₀¹ xⁱ lnⁿ(x) lnᵐ(1−x) dx
//! ```
//!
//! through their normalized form S(n,m,i) = ((−1)^{n+m}/(n!·m!))·I(n,m,i),
//! which is a polynomial in zeta values with constant term (n,m)_i.
//! Covers i ≥ 0 (three mutually checking routes), i = −1 (a single hook
//! MZV), and the convergent negative range −m ≤ i ≤ −2, plus the
//! Hurwitz-shifted T-values and the variant integral with a 1/(1−x) kernel.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::algebra::rational::Rational;
use crate::algebra::zeta_poly::ZetaPolynomial;
use crate::combin::{factorial, stirling_cycle, zts_ones};
use crate::error::{Error, Result};
use crate::mzv::{zeta_hook, HookIndex};
use crate::tiered::tiered;

/// Validated index triple (n, m, i) of a convergent logarithmic integral.
///
/// Convergence demands: i ≥ 0 always converges; i = −1 needs m ≥ 1;
/// i ≤ −2 needs 2 ≤ −i ≤ m.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LogIntegralKey {
    n: u32,
    m: u32,
    i: i64,
}

impl LogIntegralKey {
    pub fn new(n: u32, m: u32, i: i64) -> Result<Self> {
        if i == -1 && m == 0 {
            return Err(Error::domain(
                "integral with i = -1 and m = 0 diverges at x = 0",
            ));
        }
        if i < -1 && !(2 <= -i && -i <= i64::from(m)) {
            return Err(Error::domain(format!(
                "negative power i = {i} requires 2 <= -i <= m = {m}"
            )));
        }
        Ok(LogIntegralKey { n, m, i })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn i(&self) -> i64 {
        self.i
    }
}

/// ζ(a+1,{1}_b); the leading entry stays ≥ 2 in every recurrence route.
fn hook(a: u32, b: u32) -> ZetaPolynomial {
    let h = HookIndex::new(a, b).expect("leading hook entry stays >= 2 in all routes");
    zeta_hook(h)
}

/// (−1)^{n+m}·n!·m!, the factor with I(n,m,i) = normalization(n,m)·S(n,m,i).
pub fn normalization(n: u32, m: u32) -> Rational {
    let f = Rational::from_bigint(factorial(n) * factorial(m));
    if (n + m) % 2 == 0 {
        f
    } else {
        -f
    }
}

/// S(n,m,i) for i ≥ 0 by the closed expansion
///
/// ```text
/// S = (n,m)_i − Σ_{1≤a≤n, 1≤b≤m} (n−a,m−b)_i · ζ(a+1,{1}_{b−1});
/// ```
///
/// the default route.
pub fn s_exact(n: u32, m: u32, i: u32) -> ZetaPolynomial {
    let mut p = ZetaPolynomial::constant(tiered(n, m, i));
    for a in 1..=n {
        for b in 1..=m {
            let c = tiered(n - a, m - b, i);
            p = p.sub(&hook(a, b - 1).scale(&c));
        }
    }
    p
}

static S_REC_TABLE: OnceLock<Mutex<HashMap<(u32, u32, u32), ZetaPolynomial>>> = OnceLock::new();

/// S(n,m,i) for i ≥ 0 by the memoized recurrence
///
/// ```text
/// S(n,m,i) = [S(n−1,m,i) + Σ_{j=0}^{i} S(n,m−1,j) − ζ(n+1,{1}_{m−1})]/(i+1)
/// ```
///
/// with boundary rows S(0,m,i) = ζ*_{i+1}({1}_m)/(i+1) and
/// S(n,0,i) = 1/(i+1)^{n+1}.
pub fn s_rec(n: u32, m: u32, i: u32) -> ZetaPolynomial {
    if m == 0 {
        let c = Rational::from(i64::from(i) + 1)
            .pow(-(i64::from(n) + 1))
            .expect("i+1 > 0");
        return ZetaPolynomial::constant(c);
    }
    if n == 0 {
        let c = zts_ones(i + 1, m) * Rational::new(1, i64::from(i) + 1).expect("i+1 > 0");
        return ZetaPolynomial::constant(c);
    }
    let table = S_REC_TABLE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = table.lock().expect("s_rec table lock").get(&(n, m, i)) {
        return hit.clone();
    }
    let mut acc = s_rec(n - 1, m, i);
    for j in 0..=i {
        acc = acc.add(&s_rec(n, m - 1, j));
    }
    acc = acc.sub(&hook(n, m - 1));
    let value = acc.scale(&Rational::new(1, i64::from(i) + 1).expect("i+1 > 0"));
    table
        .lock()
        .expect("s_rec table lock")
        .insert((n, m, i), value.clone());
    value
}

/// S(n,m,i) for i ≥ 0, n,m ≥ 1 by the one-step recurrence that unwinds the
/// whole n-direction at once:
///
/// ```text
/// S(n,m,i) = Σ_{r=1}^{n} (i+1)^{r−n−1} [Σ_{j=0}^{i} S(r,m−1,j) − ζ(r+1,{1}_{m−1})]
///            + (i+1)^{−n−1} ζ*_{i+1}({1}_m).
/// ```
pub fn s_one_step(n: u32, m: u32, i: u32) -> Result<ZetaPolynomial> {
    if n == 0 || m == 0 {
        return Err(Error::domain(
            "one-step route applies to n >= 1 and m >= 1 (boundaries have closed forms)",
        ));
    }
    let base = Rational::from(i64::from(i) + 1);
    let mut acc = ZetaPolynomial::constant(
        base.pow(-(i64::from(n) + 1)).expect("i+1 > 0") * zts_ones(i + 1, m),
    );
    for r in 1..=n {
        let mut toll = ZetaPolynomial::zero();
        for j in 0..=i {
            toll = toll.add(&s_exact(r, m - 1, j));
        }
        toll = toll.sub(&hook(r, m - 1));
        let w = base
            .pow(i64::from(r) - i64::from(n) - 1)
            .expect("i+1 > 0");
        acc = acc.add(&toll.scale(&w));
    }
    Ok(acc)
}

/// S(n,m,−1) = ζ(n+2,{1}_{m−1}), a single hook MZV; m ≥ 1.
pub fn s_minus_one(n: u32, m: u32) -> Result<ZetaPolynomial> {
    if m == 0 {
        return Err(Error::domain(
            "integral with i = -1 and m = 0 diverges at x = 0",
        ));
    }
    Ok(hook(n + 1, m - 1))
}

/// Hurwitz-shifted T-value
/// T(n,m,i) = Σ_{ℓ≥1} ζ_{ℓ−1}({1}_{m−1})/(ℓ+i+1)^{n+1}
/// = ζ(n+1,{1}_{m−1}) − Σ_{j=0}^{i} S(n,m−1,j), for i ≥ −1.
///
/// Requires n ≥ 1: for n = 0 the defining series diverges for every m.
pub fn t_value(n: u32, m: u32, i: i64) -> Result<ZetaPolynomial> {
    if n == 0 || m == 0 {
        return Err(Error::domain(format!(
            "T-value requires n >= 1 and m >= 1, got ({n},{m})"
        )));
    }
    if i < -1 {
        return Err(Error::domain(format!("T-value requires i >= -1, got {i}")));
    }
    let mut acc = hook(n, m - 1);
    for j in 0..=i {
        acc = acc.sub(&s_exact(n, m - 1, j as u32));
    }
    Ok(acc)
}

static S_NEG_TABLE: OnceLock<Mutex<HashMap<(u32, u32, u32), ZetaPolynomial>>> = OnceLock::new();

/// S(n,m,−i) for the convergent negative powers 2 ≤ i ≤ m (the argument is
/// the magnitude of the exponent).
///
/// Boundary in n: S(0,m,−i) = Σ_{ℓ≥0} binom(i−1+ℓ,i−1)(ℓ+1)^{−m−1},
/// evaluated exactly by converting binom(ℓ+i−1,i−1) into powers of (ℓ+1)
/// with unsigned Stirling cycle numbers, which yields
/// (1/(i−1)!) Σ_{k=1}^{i−1} c(i−1,k) ζ(m+1−k).
///
/// Interior recurrence (n ≥ 1):
///
/// ```text
/// S(n,m,−i) = [Σ_{j=2}^{i−1} S(n,m−1,−j) − S(n−1,m,−i)
///              + ζ(n+1,{1}_{m−1}) + ζ(n+2,{1}_{m−2})]/(i−1).
/// ```
pub fn s_negative(n: u32, m: u32, i: u32) -> Result<ZetaPolynomial> {
    if !(2 <= i && i <= m) {
        return Err(Error::domain(format!(
            "negative power magnitude i = {i} must satisfy 2 <= i <= m = {m}"
        )));
    }
    if n == 0 {
        let mut acc = ZetaPolynomial::zero();
        for k in 1..=(i - 1) {
            let c = Rational::from_bigint(num::bigint::BigInt::from(stirling_cycle(i - 1, k)));
            acc = acc.add(&ZetaPolynomial::zeta(m + 1 - k).scale(&c));
        }
        return Ok(acc.scale(
            &Rational::from_bigint(factorial(i - 1))
                .recip()
                .expect("(i-1)! > 0"),
        ));
    }
    let table = S_NEG_TABLE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = table.lock().expect("s_negative table lock").get(&(n, m, i)) {
        return Ok(hit.clone());
    }
    let mut acc = ZetaPolynomial::zero();
    for j in 2..=(i - 1) {
        acc = acc.add(&s_negative(n, m - 1, j)?);
    }
    acc = acc.sub(&s_negative(n - 1, m, i)?);
    acc = acc.add(&hook(n, m - 1));
    acc = acc.add(&hook(n + 1, m - 2));
    let value = acc.scale(&Rational::new(1, i64::from(i) - 1).expect("i-1 >= 1"));
    table
        .lock()
        .expect("s_negative table lock")
        .insert((n, m, i), value.clone());
    Ok(value)
}

/// S for any validated key, dispatching on the sign of i.
pub fn s_value(key: &LogIntegralKey) -> ZetaPolynomial {
    if key.i >= 0 {
        s_exact(key.n, key.m, key.i as u32)
    } else if key.i == -1 {
        s_minus_one(key.n, key.m).expect("validated key has m >= 1 when i = -1")
    } else {
        s_negative(key.n, key.m, (-key.i) as u32).expect("validated key has 2 <= -i <= m")
    }
}

/// I(n,m,i) = (−1)^{n+m}·n!·m!·S(n,m,i), the integral itself.
pub fn i_exact(key: &LogIntegralKey) -> ZetaPolynomial {
    s_value(key).scale(&normalization(key.n, key.m))
}

/// The variant integral with a 1/(1−x) kernel:
///
/// ```text
/// ∫₀¹ xⁱ lnⁿ(x) lnᵐ(1−x)/(1−x) dx
///     = [i·I(n,m+1,i−1) + n·I(n−1,m+1,i−1)]/(m+1).
/// ```
///
/// Requires i ≥ 1 or n ≥ 1. For n ≥ 1 this equals the convergent integral;
/// for n = 0 the pointwise integral diverges at x = 1 and the returned
/// value is the finite combination produced by the reduction identity.
pub fn variant_integral(n: u32, m: u32, i: u32) -> Result<ZetaPolynomial> {
    if i == 0 && n == 0 {
        return Err(Error::domain(
            "variant integral with i = 0 and n = 0 diverges",
        ));
    }
    let mut acc = ZetaPolynomial::zero();
    if i >= 1 {
        let key = LogIntegralKey::new(n, m + 1, i64::from(i) - 1)?;
        acc = acc.add(&i_exact(&key).scale(&Rational::from(i64::from(i))));
    }
    if n >= 1 {
        let key = LogIntegralKey::new(n - 1, m + 1, i64::from(i) - 1)?;
        acc = acc.add(&i_exact(&key).scale(&Rational::from(i64::from(n))));
    }
    Ok(acc.scale(&Rational::new(1, i64::from(m) + 1).expect("m+1 > 0")))
}

/// Both sides of the generalized symmetry on the integrals,
/// I(n,m,i) = Σ_{j=0}^{i} binom(i,j) (−1)^j I(m,n,j); callers assert equality.
pub fn i_symmetry_check(n: u32, m: u32, i: u32) -> (ZetaPolynomial, ZetaPolynomial) {
    let key = LogIntegralKey::new(n, m, i64::from(i)).expect("i >= 0 is always valid");
    let lhs = i_exact(&key);
    let mut rhs = ZetaPolynomial::zero();
    for j in 0..=i {
        let k = LogIntegralKey::new(m, n, i64::from(j)).expect("j >= 0 is always valid");
        let c = Rational::from_bigint(crate::combin::binomial(i64::from(i), i64::from(j)));
        let term = i_exact(&k).scale(&c);
        if j % 2 == 0 {
            rhs = rhs.add(&term);
        } else {
            rhs = rhs.sub(&term);
        }
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn z(k: u32) -> ZetaPolynomial {
        ZetaPolynomial::zeta(k)
    }

    fn c(q: Rational) -> ZetaPolynomial {
        ZetaPolynomial::constant(q)
    }

    #[test]
    fn key_validation() {
        assert!(LogIntegralKey::new(3, 0, 0).is_ok());
        assert!(LogIntegralKey::new(3, 0, -1).is_err());
        assert!(LogIntegralKey::new(3, 1, -1).is_ok());
        assert!(LogIntegralKey::new(0, 2, -2).is_ok());
        assert!(LogIntegralKey::new(0, 2, -3).is_err());
        assert!(LogIntegralKey::new(5, 1, -2).is_err());
    }

    #[test]
    fn exact_route_examples() {
        assert_eq!(s_exact(2, 0, 1), c(rat(1, 8)));
        assert_eq!(s_exact(0, 2, 1), c(rat(7, 8)));
        assert_eq!(s_exact(1, 1, 0), c(Rational::from(2)).sub(&z(2)));
    }

    #[test]
    fn recurrence_route_boundaries() {
        assert_eq!(s_rec(0, 2, 1), c(rat(7, 8)));
        assert_eq!(s_rec(3, 0, 0), c(Rational::one()));
        assert_eq!(s_rec(1, 1, 0), c(Rational::from(2)).sub(&z(2)));
    }

    #[test]
    fn route_agreement() {
        for n in 0..=4u32 {
            for m in 0..=4u32 {
                for i in 0..=5u32 {
                    let a = s_exact(n, m, i);
                    let b = s_rec(n, m, i);
                    assert_eq!(a, b, "exact vs recurrence at ({n},{m},{i})");
                    if n >= 1 && m >= 1 {
                        let o = s_one_step(n, m, i).unwrap();
                        assert_eq!(a, o, "exact vs one-step at ({n},{m},{i})");
                    }
                }
            }
        }
        assert!(s_one_step(0, 1, 0).is_err());
    }

    #[test]
    fn constant_term_is_tiered() {
        for n in 0..=4u32 {
            for m in 0..=4u32 {
                for i in 0..=4u32 {
                    assert_eq!(
                        s_exact(n, m, i).constant_term(),
                        tiered(n, m, i),
                        "constant term at ({n},{m},{i})"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_grading() {
        for n in 0..=4u32 {
            for m in 0..=4u32 {
                for i in 0..=3u32 {
                    let p = s_exact(n, m, i);
                    assert!(p.max_weight() <= n + m, "weight bound at ({n},{m},{i})");
                    if n >= 1 && m >= 1 {
                        assert_eq!(p.max_weight(), n + m, "top weight at ({n},{m},{i})");
                    } else {
                        assert_eq!(p.max_weight(), 0, "boundaries are constants");
                    }
                }
            }
        }
    }

    #[test]
    fn minus_one_is_a_hook() {
        assert_eq!(s_minus_one(0, 1).unwrap(), z(2));
        assert_eq!(s_minus_one(1, 1).unwrap(), z(3));
        assert_eq!(s_minus_one(0, 2).unwrap(), z(3));
        assert!(s_minus_one(2, 0).is_err());
    }

    #[test]
    fn t_values() {
        assert_eq!(t_value(1, 1, -1).unwrap(), z(2));
        assert_eq!(t_value(1, 1, 0).unwrap(), z(2).sub(&c(Rational::one())));
        assert_eq!(t_value(2, 1, 0).unwrap(), z(3).sub(&c(Rational::one())));
        assert!(t_value(0, 1, 0).is_err());
        assert!(t_value(1, 1, -2).is_err());
    }

    #[test]
    fn t_telescopes_to_s() {
        // S(n,m,i) = [T(n,m,i−1) − T(n,m,i)]/(i+1) follows from the
        // definitions; verify the equivalent telescoped identity.
        for n in 1..=3u32 {
            for m in 1..=3u32 {
                for i in 0..=3i64 {
                    let lhs = t_value(n, m, i - 1)
                        .unwrap()
                        .sub(&t_value(n, m, i).unwrap());
                    let rhs = s_exact(n, m - 1, i as u32);
                    assert_eq!(lhs, rhs, "telescoping at ({n},{m},{i})");
                }
            }
        }
    }

    #[test]
    fn negative_powers() {
        assert_eq!(s_negative(0, 2, 2).unwrap(), z(2));
        assert_eq!(s_negative(0, 3, 2).unwrap(), z(3));
        // 2 S(1,2,−2) = −S(0,2,−2) + ζ(2,1) + ζ(3), with the recurrence
        // denominator i−1 = 1
        assert_eq!(
            s_negative(1, 2, 2).unwrap(),
            z(3).scale(&Rational::from(2)).sub(&z(2))
        );
        assert!(s_negative(1, 2, 3).is_err());
        assert!(s_negative(1, 5, 1).is_err());
    }

    #[test]
    fn integral_normalization() {
        let k = |n, m, i| LogIntegralKey::new(n, m, i).unwrap();
        assert_eq!(i_exact(&k(1, 1, 0)), c(Rational::from(2)).sub(&z(2)));
        assert_eq!(i_exact(&k(2, 0, 0)), c(Rational::from(2)));
        assert_eq!(i_exact(&k(0, 1, 0)), c(Rational::from(-1)));
        assert_eq!(i_exact(&k(0, 0, 0)), c(Rational::one()));
    }

    #[test]
    fn variant_integrals() {
        assert_eq!(variant_integral(0, 0, 1).unwrap(), c(Rational::from(-1)));
        assert_eq!(
            variant_integral(1, 0, 1).unwrap(),
            c(Rational::one()).sub(&z(2))
        );
        assert_eq!(variant_integral(0, 1, 1).unwrap(), c(Rational::one()));
        assert!(variant_integral(0, 3, 0).is_err());
        // ∫₀¹ ln x/(1−x) dx = −ζ(2)
        assert_eq!(variant_integral(1, 0, 0).unwrap(), z(2).neg());
    }

    #[test]
    fn generalized_symmetry_for_integrals() {
        for n in 0..=3u32 {
            for m in 0..=3u32 {
                for i in 0..=4u32 {
                    let (lhs, rhs) = i_symmetry_check(n, m, i);
                    assert_eq!(lhs, rhs, "I-symmetry at ({n},{m},{i})");
                }
            }
        }
    }
}
