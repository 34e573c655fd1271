//! Numeric zeta values via Euler-Maclaurin acceleration.
//!
//! ζ(k) = Σ_{j=1}^{N−1} j^{−k} + N^{−k}/2 + N^{1−k}/(k−1)
//!        + Σ_{r=1}^{R} B_{2r}/(2r)! · k(k+1)⋯(k+2r−2) · N^{−k−2r+1} + E,
//!
//! with |E| bounded by the first omitted correction term. Everything up to
//! the final conversion is exact rational arithmetic, so the only rounding
//! is the single conversion into the working precision.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use astro_float::BigFloat;
use num::bigint::BigInt;

use crate::algebra::rational::Rational;
use crate::combin::{bernoulli, factorial};
use crate::error::{Error, Result};
use crate::numeric::real::{NumericValue, RealCtx};

static ZETA_CACHE: OnceLock<Mutex<HashMap<(u32, usize), BigFloat>>> = OnceLock::new();

/// ζ(k) at the context's working precision (k ≥ 2), cached per (k, bits).
pub fn zeta_raw(k: u32, ctx: &RealCtx) -> BigFloat {
    assert!(k >= 2, "zeta_raw needs k >= 2");
    let key = (k, ctx.bits());
    let cache = ZETA_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("zeta cache lock").get(&key) {
        return hit.clone();
    }
    let exact = zeta_rational_approx(k, ctx.digits() + 14);
    let value = ctx.from_rational(&exact);
    cache
        .lock()
        .expect("zeta cache lock")
        .insert(key, value.clone());
    value
}

/// A rational q with |q − ζ(k)| < 10^{−digits}.
fn zeta_rational_approx(k: u32, digits: u32) -> Rational {
    let tol = Rational::from(10).pow(-i64::from(digits)).expect("10 > 0");
    let mut n = ((digits as f64) * 0.45).ceil() as u32 + k + 4;
    loop {
        if let Some(v) = euler_maclaurin(k, n, &tol) {
            return v;
        }
        n *= 2;
    }
}

/// One Euler-Maclaurin attempt at summation cutoff n; None if the
/// asymptotic corrections start growing before reaching the tolerance.
fn euler_maclaurin(k: u32, n: u32, tol: &Rational) -> Option<Rational> {
    let nq = Rational::from(i64::from(n));
    let mut acc = Rational::zero();
    for j in 1..n {
        acc += &Rational::from(i64::from(j)).pow(-i64::from(k)).expect("j > 0");
    }
    let n_pow_k = nq.pow(-i64::from(k)).expect("n > 0");
    acc += &(Rational::new(1, 2).unwrap() * n_pow_k.clone());
    acc += &(nq.pow(1 - i64::from(k)).expect("n > 0")
        * Rational::new(1, i64::from(k) - 1).expect("k >= 2"));
    // rising factorial k(k+1)...(k+2r-2) accumulated incrementally
    let mut rising = BigInt::from(k);
    let mut prev_mag: Option<Rational> = None;
    let mut r = 1u32;
    loop {
        let term = Rational::from_bigint(bernoulli(2 * r).numer().clone())
            * Rational::from_bigint(rising.clone())
            * nq.pow(-i64::from(k) - 2 * i64::from(r) + 1).expect("n > 0")
            * Rational::from_bigint(bernoulli(2 * r).denom() * factorial(2 * r))
                .recip()
                .expect("nonzero");
        let mag = term.abs();
        if let Some(prev) = &prev_mag {
            if &mag > prev {
                return None;
            }
        }
        acc += &term;
        if mag < *tol {
            return Some(acc);
        }
        prev_mag = Some(mag);
        for step in 0..2u32 {
            rising *= BigInt::from(k + 2 * r - 1 + step);
        }
        r += 1;
        if r > 4 * n {
            return None;
        }
    }
}

/// ζ(k) to relative 10^{1−prec}.
pub fn zeta_numeric(k: u32, prec: u32) -> Result<NumericValue> {
    if k < 2 {
        return Err(Error::domain(format!("zeta argument must be >= 2, got {k}")));
    }
    let mut ctx = RealCtx::new(prec);
    let raw = zeta_raw(k, &ctx);
    Ok(NumericValue::new(raw, prec, &mut ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFS: [(u32, &str); 6] = [
        (2, "1.64493406684822643647241516665"),
        (3, "1.20205690315959428539973816151"),
        (4, "1.08232323371113819151600369654"),
        (5, "1.03692775514336992633136548646"),
        (6, "1.01734306198444913971451792979"),
        (7, "1.00834927738192282683979754985"),
    ];

    #[test]
    fn matches_reference_values() {
        for (k, want) in REFS {
            let got = zeta_numeric(k, 30).unwrap();
            assert_eq!(got.value, *want, "zeta({k})");
        }
    }

    #[test]
    fn rejects_small_arguments() {
        assert!(zeta_numeric(1, 10).is_err());
        assert!(zeta_numeric(0, 10).is_err());
    }

    #[test]
    fn high_precision_self_consistent() {
        // pi^2/6 against the Euler-Maclaurin route
        let mut ctx = RealCtx::new(50);
        let z2 = zeta_raw(2, &ctx);
        let pi = ctx.pi();
        let want = ctx.div(&ctx.mul(&pi, &pi), &ctx.from_i64(6));
        let diff = ctx.sub(&z2, &want);
        assert!(ctx.abs_lt(&diff, &ctx.pow10(-48)));
    }
}
