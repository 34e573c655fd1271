//! Tiered binomial coefficients (n,m)_i.
//!
//! These are the Taylor coefficients of the bivariate rational functions
//!
//! ```text
//! f_i(x,y) = ∏_{j=1}^{i} (j−x) / ∏_{j=1}^{i+1} (j−(x+y)),
//! ```
//!
//! so that (n,m)_i = [x^n y^m] f_i(x,y). Tier 0 gives the ordinary binomial
//! coefficients binom(n+m,n). Three independent computation routes are
//! provided (explicit truncated-zeta formula, memoized recurrence,
//! generating-function extraction) plus the identities tying the family
//! together: row sums by three routes, Abel-summed alternating sums, tier
//! sums, the generalized symmetry, the Euler-polynomial central relation,
//! and the complete three-variable generating function.

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::algebra::rational::Rational;
use crate::algebra::series::{rational_expand_1d, series_rational_expand, TruncatedSeries};
use crate::combin::{
    bell_complete, binomial, euler_poly_coeffs, factorial, harmonic, legendre_coeffs, zt_ones,
    zts_ones,
};
use crate::error::{Error, Result};

/// (n,m)_i by the explicit formula
/// (1/(i+1)) Σ_{k=0}^{n} (−1)^k binom(n−k+m,m) ζ_i({1}_k) ζ*_{i+1}({1}_{n−k+m});
/// the default route (no recursion, no series machinery).
pub fn tiered(n: u32, m: u32, i: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n.min(i) {
        // ζ_i({1}_k) vanishes for k > i
        let c = Rational::from_bigint(binomial(i64::from(n - k + m), i64::from(m)))
            * zt_ones(i, k)
            * zts_ones(i + 1, n - k + m);
        if k % 2 == 0 {
            acc += &c;
        } else {
            acc -= &c;
        }
    }
    acc * Rational::new(1, i64::from(i) + 1).expect("i+1 > 0")
}

static REC_TABLE: OnceLock<Mutex<HashMap<(u32, u32, u32), Rational>>> = OnceLock::new();

/// (n,m)_i by the memoized recurrence
/// (n,m)_i = [(n−1,m)_i + Σ_{j=0}^{i} (n,m−1)_j]/(i+1)
/// with boundary rows (n,0)_i = 1/(i+1)^{n+1} and (0,m)_i = ζ*_{i+1}({1}_m)/(i+1);
/// the bulk-table route.
pub fn tiered_rec(n: u32, m: u32, i: u32) -> Rational {
    if m == 0 {
        return Rational::from(i64::from(i) + 1)
            .pow(-(i64::from(n) + 1))
            .expect("i+1 > 0");
    }
    if n == 0 {
        return zts_ones(i + 1, m) * Rational::new(1, i64::from(i) + 1).expect("i+1 > 0");
    }
    let table = REC_TABLE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = table.lock().expect("tiered table lock").get(&(n, m, i)) {
        return hit.clone();
    }
    let mut acc = tiered_rec(n - 1, m, i);
    for j in 0..=i {
        acc += &tiered_rec(n, m - 1, j);
    }
    let value = acc * Rational::new(1, i64::from(i) + 1).expect("i+1 > 0");
    table
        .lock()
        .expect("tiered table lock")
        .insert((n, m, i), value.clone());
    value
}

/// The generating function f_i(x,y) expanded through total degree `order`.
pub fn tier_generating_function(i: u32, order: u32) -> TruncatedSeries<Rational> {
    let num: Vec<Rational> = (1..=i64::from(i)).map(Rational::from).collect();
    let den: Vec<Rational> = (1..=i64::from(i) + 1).map(Rational::from).collect();
    series_rational_expand(&num, &den, order).expect("roots 1..i+1 are nonzero")
}

/// (n,m)_i by coefficient extraction from f_i(x,y).
pub fn tiered_gf(n: u32, m: u32, i: u32) -> Rational {
    tier_generating_function(i, n + m)
        .coeff(n, m)
        .expect("extraction within truncation order")
}

/// Closed form for tier 1:
/// (n,m)_1 = binom(n+m−1,m−1) − 2^{−(n+m)}[binom(n+m,n)/2 − binom(n+m−1,n−1)],
/// valid for n+m ≥ 1 with binom(·,k) = 0 for k < 0; the excluded corner
/// (0,0) returns the boundary value (0,0)_1 = 1/2 directly.
pub fn tier1_closed(n: u32, m: u32) -> Rational {
    if n == 0 && m == 0 {
        return Rational::new(1, 2).expect("nonzero");
    }
    let n = i64::from(n);
    let m = i64::from(m);
    let head = Rational::from_bigint(binomial(n + m - 1, m - 1));
    let bracket = Rational::from_bigint(binomial(n + m, n))
        * Rational::new(1, 2).expect("nonzero")
        - Rational::from_bigint(binomial(n + m - 1, n - 1));
    let scale = Rational::from(2).pow(-(n + m)).expect("2 != 0");
    head - scale * bracket
}

/// Computation route for [`row_sum`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RowSumRoute {
    /// Convolution of truncated zeta and zeta-star values.
    Convolution,
    /// Evaluation through Legendre polynomial coefficients.
    Legendre,
    /// Complete Bell polynomial of generalized harmonic numbers.
    Bell,
}

impl FromStr for RowSumRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convolution" => Ok(RowSumRoute::Convolution),
            "legendre" => Ok(RowSumRoute::Legendre),
            "bell" => Ok(RowSumRoute::Bell),
            other => Err(Error::usage(format!("unknown row-sum route {other:?}"))),
        }
    }
}

/// Row sum N_i = Σ_{n+m=N} (n,m)_i by the selected route.
pub fn row_sum(total: u32, i: u32, route: RowSumRoute) -> Rational {
    let inv_tier = Rational::new(1, i64::from(i) + 1).expect("i+1 > 0");
    match route {
        RowSumRoute::Convolution => {
            // (1/(i+1)) Σ_ℓ (−1)^ℓ 2^{N−ℓ} ζ_i({1}_ℓ) ζ*_{i+1}({1}_{N−ℓ})
            let mut acc = Rational::zero();
            for l in 0..=total.min(i) {
                let c = Rational::from(2)
                    .pow(i64::from(total - l))
                    .expect("2 != 0")
                    * zt_ones(i, l)
                    * zts_ones(i + 1, total - l);
                if l % 2 == 0 {
                    acc += &c;
                } else {
                    acc -= &c;
                }
            }
            acc * inv_tier
        }
        RowSumRoute::Legendre => {
            // 2^{N−i} Σ_{j=0}^{⌊i/2⌋} a_{i,i−2j} (2j+1)^{−(N+1)}
            let coeffs = legendre_coeffs(i);
            let mut acc = Rational::zero();
            for j in 0..=i / 2 {
                acc += &(coeffs[(i - 2 * j) as usize].clone()
                    * Rational::from(2 * i64::from(j) + 1)
                        .pow(-(i64::from(total) + 1))
                        .expect("odd base"));
            }
            acc * Rational::from(2).pow(i64::from(total) - i64::from(i)).expect("2 != 0")
        }
        RowSumRoute::Bell => {
            // B_N(a₁,…,a_N)/((i+1)·N!), a_k = (k−1)!((2^k−1)H_i^{(k)} + 2^k/(i+1)^k)
            let args: Vec<Rational> = (1..=total)
                .map(|k| {
                    let two_k = Rational::from(2).pow(i64::from(k)).expect("2 != 0");
                    let body = (&two_k - &Rational::one()) * harmonic(i, k)
                        + two_k
                            * Rational::from(i64::from(i) + 1)
                                .pow(-i64::from(k))
                                .expect("i+1 > 0");
                    Rational::from_bigint(factorial(k - 1)) * body
                })
                .collect();
            bell_complete(&args)
                .checked_div(&Rational::from_bigint(factorial(total)))
                .expect("N! > 0")
                * inv_tier
        }
    }
}

/// Abel-summed alternating sum over m: Σ_{m≥0} (−1)^m (n,m)_i interpreted
/// as the x^n-coefficient of f_i(x,−1), with closed form
/// (i+1)/(i+2)^{n+1} − i/(i+1)^{n+1}.
///
/// The termwise series diverges ((n,m)_i approaches a nonzero limit in m),
/// so no partial-summation route exists; the certifying oracle is
/// [`alt_sum_over_m_extraction`].
pub fn alt_sum_over_m(n: u32, i: u32) -> Rational {
    let n = i64::from(n);
    let i = i64::from(i);
    Rational::from(i + 1) * Rational::from(i + 2).pow(-(n + 1)).expect("i+2 > 0")
        - Rational::from(i) * Rational::from(i + 1).pow(-(n + 1)).expect("i+1 > 0")
}

/// Exact x^n-coefficient of f_i(x,−1) = (1−x)/((i+1−x)(i+2−x)), the
/// generating-function oracle for [`alt_sum_over_m`].
pub fn alt_sum_over_m_extraction(n: u32, i: u32) -> Rational {
    let i = i64::from(i);
    let coeffs = rational_expand_1d(
        &[Rational::one()],
        &[Rational::from(i + 1), Rational::from(i + 2)],
        n,
    )
    .expect("positive roots");
    coeffs[n as usize].clone()
}

/// Abel-summed alternating sum over n: Σ_{n≥0} (−1)^n (n,m)_i interpreted
/// as the y^m-coefficient of f_i(−1,y), with closed form
/// (ζ*_{i+2}({1}_m) − ζ*_{i+2}({1}_{m−1}))/(i+2); requires m ≥ 1.
///
/// For m ≥ 1 the terms approach a nonzero limit in n, so the series needs
/// Abel summation; averaged partial sums converge to the same value
/// because the terms settle geometrically (checked in tests).
pub fn alt_sum_over_n(m: u32, i: u32) -> Result<Rational> {
    if m == 0 {
        return Err(Error::domain(
            "alternating sum over n requires m >= 1 (zeta-star index m-1 must be >= 0)",
        ));
    }
    Ok((zts_ones(i + 2, m) - zts_ones(i + 2, m - 1))
        * Rational::new(1, i64::from(i) + 2).expect("i+2 > 0"))
}

/// Exact y^m-coefficient of f_i(−1,y) = (i+1)!/∏_{j=2}^{i+2}(j−y), the
/// generating-function oracle for [`alt_sum_over_n`].
pub fn alt_sum_over_n_extraction(m: u32, i: u32) -> Rational {
    let den: Vec<Rational> = (2..=i64::from(i) + 2).map(Rational::from).collect();
    let coeffs = rational_expand_1d(&[], &den, m).expect("positive roots");
    coeffs[m as usize].clone() * Rational::from_bigint(factorial(i + 1))
}

/// Tier sum Σ_{i=0}^{N} (n,m)_i by the closed form
/// Σ_j (−1)^j binom(n+m+1−j, m+1) ζ_{N+1}({1}_j) ζ*_{N+1}({1}_{n+m+1−j}).
pub fn tier_sum(n: u32, m: u32, upper: u32) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=(n + m + 1) {
        let c = Rational::from_bigint(binomial(
            i64::from(n + m + 1 - j),
            i64::from(m) + 1,
        )) * zt_ones(upper + 1, j)
            * zts_ones(upper + 1, n + m + 1 - j);
        if c.is_zero() {
            continue;
        }
        if j % 2 == 0 {
            acc += &c;
        } else {
            acc -= &c;
        }
    }
    acc
}

/// Both sides of the generalized symmetry
/// (n,m)_i = Σ_{j=0}^{i} binom(i,j) (−1)^j (m,n)_j; callers assert equality.
pub fn gen_symmetry_check(n: u32, m: u32, i: u32) -> (Rational, Rational) {
    let lhs = tiered(n, m, i);
    let mut rhs = Rational::zero();
    for j in 0..=i {
        let term = Rational::from_bigint(binomial(i64::from(i), i64::from(j))) * tiered(m, n, j);
        if j % 2 == 0 {
            rhs += &term;
        } else {
            rhs -= &term;
        }
    }
    (lhs, rhs)
}

/// Both sides of the Euler-polynomial central relation
/// (n,n)_{2k+1} = −Σ_{j=0}^{k} e_{2k+1,2j} (n,n)_{2j}.
pub fn euler_central_check(n: u32, k: u32) -> (Rational, Rational) {
    let lhs = tiered(n, n, 2 * k + 1);
    let e = euler_poly_coeffs(2 * k + 1);
    let mut rhs = Rational::zero();
    for j in 0..=k {
        rhs += &(e[(2 * j) as usize].clone() * tiered(n, n, 2 * j));
    }
    (lhs, -rhs)
}

/// Compares (n,m)_i against the z^i-term of the complete generating
/// function assembled from rising factorials,
///
/// ```text
/// [z^i] f(x,y,z) = (1/(1−x−y)) · (1−x)↑i / (2−x−y)↑i,
/// ```
///
/// extracted at x^n y^m. The 1/(1−x−y) prefactor is required: without it
/// the i=0 term would be the constant 1 instead of the binomial series.
pub fn complete_gf_check(n: u32, m: u32, i: u32) -> (Rational, Rational) {
    let order = n + m;
    // prefactor 1/(1−(x+y))
    let mut g = series_rational_expand(&[], &[Rational::one()], order).expect("root 1 nonzero");
    // (1−x)↑i = ∏_{t=0}^{i−1} (1+t−x)
    for t in 0..i64::from(i) {
        let factor = TruncatedSeries::constant(Rational::from(1 + t), order)
            .sub(&TruncatedSeries::x(order));
        g = g.mul(&factor);
    }
    // 1/(2−x−y)↑i = ∏_{t=0}^{i−1} (2+t−(x+y))^{−1}
    for t in 0..i64::from(i) {
        let inv = series_rational_expand(&[], &[Rational::from(2 + t)], order)
            .expect("positive root");
        g = g.mul(&inv);
    }
    let extracted = g.coeff(n, m).expect("within truncation order");
    (tiered(n, m, i), extracted)
}
