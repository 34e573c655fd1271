//! Symbolic reduction of hook multiple zeta values ζ(a+1,{1}_b).
//!
//! The whole hook family reduces to polynomials in ordinary zeta values by
//! coefficient extraction from the generating function
//!
//! ```text
//! Σ_{m,n≥0} ζ(m+2,{1}_n) x^{m+1} y^{n+1}
//!     = 1 − exp( Σ_{k≥2} (x^k + y^k − (x+y)^k) ζ(k)/k ).
//! ```
//!
//! Also enumerates the Kaneko–Sakata expansion of ζ(m+1,{1}_{n−1}) into
//! general-index MZVs, used as a numeric cross-check only.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::algebra::rational::Rational;
use crate::algebra::series::TruncatedSeries;
use crate::algebra::zeta_poly::ZetaPolynomial;
use crate::error::{Error, Result};

/// Index of the hook MZV ζ(a+1,{1}_b): leading entry a+1 ≥ 2, then b ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HookIndex {
    a: u32,
    b: u32,
}

impl HookIndex {
    /// Requires a ≥ 1 so the index is admissible.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a < 1 {
            return Err(Error::domain(format!(
                "hook index requires a >= 1, got a={a}"
            )));
        }
        Ok(HookIndex { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// a + 1 + b.
    pub fn weight(&self) -> u32 {
        self.a + 1 + self.b
    }

    /// The index as the explicit tuple (a+1, 1, …, 1).
    pub fn to_index_vector(&self) -> Vec<u32> {
        let mut v = vec![self.a + 1];
        v.extend(std::iter::repeat(1).take(self.b as usize));
        v
    }
}

static HOOK_CACHE: OnceLock<Mutex<HashMap<(u32, u32), ZetaPolynomial>>> = OnceLock::new();

/// ζ(a+1,{1}_b) as a polynomial in ζ(2), ζ(3), …: the coefficient of
/// x^a y^{b+1} in 1 − exp(Σ_{k=2}^{a+b+1} (x^k+y^k−(x+y)^k) ζ(k)/k).
///
/// Terms with k > a+b+1 cannot reach the extracted coefficient, so the
/// computation is exact. Every monomial of the result has weight exactly
/// a+b+1. Values are memoized: the logarithmic integrals and the Quicksort
/// moments request the same hooks repeatedly.
pub fn zeta_hook(h: HookIndex) -> ZetaPolynomial {
    let cache = HOOK_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("hook cache lock").get(&(h.a, h.b)) {
        return hit.clone();
    }

    let order = h.a + h.b + 2;
    let x = TruncatedSeries::<ZetaPolynomial>::x(order);
    let y = TruncatedSeries::<ZetaPolynomial>::y(order);
    let xy = x.add(&y);

    let mut arg = TruncatedSeries::<ZetaPolynomial>::zero(order);
    let mut xk = x.clone();
    let mut yk = y.clone();
    let mut xyk = xy.clone();
    for k in 2..=(h.a + h.b + 1) {
        xk = xk.mul(&x);
        yk = yk.mul(&y);
        xyk = xyk.mul(&xy);
        let body = xk.add(&yk).sub(&xyk);
        let weight = body.scale(&Rational::new(1, i64::from(k)).expect("k >= 2"));
        arg = arg.add(&weight.mul(&TruncatedSeries::constant(ZetaPolynomial::zeta(k), order)));
    }

    let series = TruncatedSeries::one(order).sub(&arg.exp().expect("argument has no constant term"));
    let value = series
        .coeff(h.a, h.b + 1)
        .expect("a + b + 1 <= truncation order");

    cache
        .lock()
        .expect("hook cache lock")
        .insert((h.a, h.b), value.clone());
    value
}

/// One signed general-index MZV in a Kaneko–Sakata expansion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SignedMzv {
    /// +1 or −1.
    pub sign: i32,
    /// Admissible index vector (every entry ≥ 2 in this family).
    pub index: Vec<u32>,
}

/// All compositions of `total` into exactly `parts` positive parts.
fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    // last part gets the remainder, so each prefix part leaves >= parts-1
    for first in 1..=(total.saturating_sub(parts - 1)) {
        for mut tail in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.append(&mut tail);
            out.push(v);
        }
    }
    out
}

/// The Kaneko–Sakata expansion of ζ(m+1,{1}_{n−1}), m,n ≥ 1:
///
/// ```text
/// ζ(m+1,{1}_{n−1}) = Σ_{i=1}^{min(m,n)} (−1)^{i−1}
///     Σ_{μ ⊨ m, ν ⊨ n, both of depth i} ζ(μ₁+ν₁, …, μ_i+ν_i)
/// ```
///
/// where ⊨ denotes compositions into positive parts. Every produced index
/// entry is ≥ 2, so each term is admissible.
pub fn kaneko_sakata_terms(m: u32, n: u32) -> Result<Vec<SignedMzv>> {
    if m < 1 || n < 1 {
        return Err(Error::domain(format!(
            "Kaneko-Sakata expansion requires m,n >= 1, got ({m},{n})"
        )));
    }
    let mut out = Vec::new();
    for i in 1..=m.min(n) {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        for mu in compositions(m, i) {
            for nu in compositions(n, i) {
                let index: Vec<u32> = mu.iter().zip(nu.iter()).map(|(a, b)| a + b).collect();
                out.push(SignedMzv { sign, index });
            }
        }
    }
    Ok(out)
}
