//! Moments, constant terms, and cumulants of the quicksort limit law.
//!
//! The number of comparisons C_n of quicksort on a uniform random
//! permutation satisfies (C_n − E(C_n))/(n+1) → Z in distribution. The
//! moments μ_s = E(Z^s) obey a quadratic recurrence driven by the entropy
//! integrals E(k₁,k₂,k₃) = ∫₀¹ x^{k₁}(1−x)^{k₂}C(x)^{k₃} dx with
//! C(x) = 1 + 2x ln x + 2(1−x) ln(1−x), all of which reduce exactly to
//! polynomials in zeta values. The constant terms of the μ_s admit an
//! independent recurrence through tiered binomial coefficients, the shifted
//! cumulants κ_s(Z) + κ_s(G) collapse to rationals against a matching
//! Gumbel tail, and a direct simulation of the algorithm closes the loop
//! end to end.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::algebra::rational::{rat, Rational};
use crate::algebra::zeta_poly::ZetaPolynomial;
use crate::combin::{bell_partial, binomial, factorial, harmonic, multinomial};
use crate::error::{Error, Result};
use crate::logint::{i_exact, LogIntegralKey};
use crate::tiered::tiered;

/// Compositions of `total` into three ordered nonnegative parts.
fn compositions_3(total: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            out.push((a, b, total - a - b));
        }
    }
    out
}

static EI_TABLE: OnceLock<Mutex<HashMap<(u32, u32, u32), ZetaPolynomial>>> = OnceLock::new();

/// E(k₁,k₂,k₃) = ∫₀¹ x^{k₁}(1−x)^{k₂}C(x)^{k₃} dx, exactly: expanding the
/// powers of C and of (1−x) reduces everything to ∫ xⁱ lnⁿ(x) lnᵐ(1−x) dx.
pub fn entropy_integral(k1: u32, k2: u32, k3: u32) -> ZetaPolynomial {
    let key = (k1, k2, k3);
    let table = EI_TABLE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = table.lock().expect("entropy table lock").get(&key) {
        return hit.clone();
    }
    let mut acc = ZetaPolynomial::zero();
    for (n, m, p) in compositions_3(k3) {
        let outer = Rational::from_bigint(multinomial(&[n, m, p]))
            * Rational::from(2).pow(i64::from(n + m)).expect("2 != 0");
        let mut inner = ZetaPolynomial::zero();
        for j in 0..=i64::from(k2 + m) {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let c = Rational::from_bigint(binomial(i64::from(k2 + m), j)) * Rational::from(sign);
            let key = LogIntegralKey::new(n, m, i64::from(k1 + n) + j)
                .expect("nonnegative exponents are always admissible");
            inner = inner.add(&i_exact(&key).scale(&c));
        }
        acc = acc.add(&inner.scale(&outer));
    }
    table
        .lock()
        .expect("entropy table lock")
        .insert(key, acc.clone());
    acc
}

static MU_TABLE: OnceLock<Mutex<HashMap<u32, ZetaPolynomial>>> = OnceLock::new();

/// μ_s = E(Z^s), exactly. μ₀ = 1, μ₁ = 0, and for s ≥ 2
///
/// ```text
/// μ_s = (s+1)/(s−1) Σ_{k₁+k₂+k₃=s, k₁,k₂<s} multinom(s;k₁,k₂,k₃)
///                     μ_{k₁} μ_{k₂} E(k₁,k₂,k₃).
/// ```
pub fn qs_moment(s: u32) -> ZetaPolynomial {
    if s == 0 {
        return ZetaPolynomial::one();
    }
    if s == 1 {
        return ZetaPolynomial::zero();
    }
    let table = MU_TABLE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = table.lock().expect("moment table lock").get(&s) {
        return hit.clone();
    }
    let mut acc = ZetaPolynomial::zero();
    for (k1, k2, k3) in compositions_3(s) {
        if k1 == s || k2 == s {
            continue;
        }
        let c = Rational::from_bigint(multinomial(&[k1, k2, k3]));
        let term = qs_moment(k1)
            .mul(&qs_moment(k2))
            .mul(&entropy_integral(k1, k2, k3))
            .scale(&c);
        acc = acc.add(&term);
    }
    let result = acc.scale(&rat(i64::from(s) + 1, i64::from(s) - 1));
    table
        .lock()
        .expect("moment table lock")
        .insert(s, result.clone());
    result
}

/// Route selector for the constant terms of the moments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CtRoute {
    /// Read the constant term off the exact moment polynomial.
    Projection,
    /// Dedicated recurrence through tiered binomial coefficients, never
    /// forming the full polynomials.
    Recurrence,
}

/// Constant term c_s of μ_s in the zeta-value basis.
pub fn qs_constant_term(s: u32, route: CtRoute) -> Rational {
    match route {
        CtRoute::Projection => qs_moment(s).constant_term(),
        CtRoute::Recurrence => ct_recurrence(s),
    }
}

fn ct_recurrence(s: u32) -> Rational {
    let mut c: Vec<Rational> = vec![Rational::one(), Rational::zero()];
    for t in 2..=s.max(1) {
        let mut acc = Rational::zero();
        for (k1, k2, k3) in compositions_3(t) {
            if k1 == t || k2 == t {
                continue;
            }
            if c[k1 as usize].is_zero() || c[k2 as usize].is_zero() {
                continue;
            }
            let mut inner = Rational::zero();
            for (n, m, p) in compositions_3(k3) {
                let sign = if (n + m) % 2 == 0 { 1 } else { -1 };
                let outer = Rational::from_bigint(multinomial(&[n, m, p]))
                    * Rational::from(2).pow(i64::from(n + m)).expect("2 != 0")
                    * Rational::from(sign)
                    * Rational::from_bigint(factorial(n) * factorial(m));
                let mut alt = Rational::zero();
                for j in 0..=(m + k2) {
                    let jsign = if j % 2 == 0 { 1 } else { -1 };
                    alt += &(Rational::from_bigint(binomial(i64::from(m + k2), i64::from(j)))
                        * Rational::from(jsign)
                        * tiered(n, m, n + k1 + j));
                }
                inner += &(outer * alt);
            }
            acc += &(Rational::from_bigint(multinomial(&[k1, k2, k3]))
                * c[k1 as usize].clone()
                * c[k2 as usize].clone()
                * inner);
        }
        c.push(acc * rat(i64::from(t) + 1, i64::from(t) - 1));
    }
    c[s as usize].clone()
}

/// Normalized constant term c̃_s = (−1)^s c_s/(s!·2^s), by its own
/// recurrence (no reference to c_s).
pub fn qs_normalized_ct(s: u32) -> Rational {
    let mut c: Vec<Rational> = vec![Rational::one(), Rational::zero()];
    for t in 2..=s.max(1) {
        let mut acc = Rational::zero();
        for (k1, k2, k3) in compositions_3(t) {
            if k1 == t || k2 == t {
                continue;
            }
            if c[k1 as usize].is_zero() || c[k2 as usize].is_zero() {
                continue;
            }
            let mut inner = Rational::zero();
            for (n, m, p) in compositions_3(k3) {
                let sign = if p % 2 == 0 { 1 } else { -1 };
                let outer = Rational::from(sign)
                    * (Rational::from_bigint(factorial(p))
                        * Rational::from(2).pow(i64::from(p)).expect("2 != 0"))
                    .recip()
                    .expect("p!·2^p > 0");
                let mut alt = Rational::zero();
                for j in 0..=(m + k2) {
                    let jsign = if j % 2 == 0 { 1 } else { -1 };
                    alt += &(Rational::from_bigint(binomial(i64::from(m + k2), i64::from(j)))
                        * Rational::from(jsign)
                        * tiered(n, m, n + k1 + j));
                }
                inner += &(outer * alt);
            }
            acc += &(c[k1 as usize].clone() * c[k2 as usize].clone() * inner);
        }
        c.push(acc * rat(i64::from(t) + 1, i64::from(t) - 1));
    }
    c[s as usize].clone()
}

/// Exact moments μ₀..μ_s of the limit law.
#[derive(Clone, Debug, Serialize)]
pub struct MomentTable {
    pub moments: Vec<ZetaPolynomial>,
}

impl MomentTable {
    pub fn up_to(s: u32) -> Self {
        MomentTable {
            moments: (0..=s).map(qs_moment).collect(),
        }
    }

    pub fn moment(&self, k: u32) -> &ZetaPolynomial {
        &self.moments[k as usize]
    }
}

/// Exact cumulants κ₁..κ_s of the limit law (index 0 is a zero
/// placeholder).
#[derive(Clone, Debug, Serialize)]
pub struct CumulantTable {
    pub cumulants: Vec<ZetaPolynomial>,
}

impl CumulantTable {
    pub fn up_to(s: u32) -> Self {
        CumulantTable {
            cumulants: cumulants_from_moments(&MomentTable::up_to(s).moments),
        }
    }

    pub fn cumulant(&self, k: u32) -> &ZetaPolynomial {
        &self.cumulants[k as usize]
    }
}

/// κ_s from μ₁..μ_s via κ_s = Σ_{j=1}^s (−1)^{j−1}(j−1)! B_{s,j}(μ₁,…,μ_{s−j+1});
/// input and output are indexed by order, with entry 0 ignored/zero.
pub fn cumulants_from_moments(moments: &[ZetaPolynomial]) -> Vec<ZetaPolynomial> {
    let mut out = vec![ZetaPolynomial::zero()];
    for s in 1..moments.len() as u32 {
        let mut acc = ZetaPolynomial::zero();
        for j in 1..=s {
            let b = bell_partial(s, j, &moments[1..=(s - j + 1) as usize])
                .expect("index bounds guaranteed by loop");
            let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
            let c = Rational::from_bigint(factorial(j - 1)) * Rational::from(sign);
            acc = acc.add(&b.scale(&c));
        }
        out.push(acc);
    }
    out
}

/// μ_s from κ₁..κ_s via the complete Bell polynomial μ_s = B_s(κ₁,…,κ_s);
/// same indexing convention as `cumulants_from_moments`.
pub fn moments_from_cumulants(cumulants: &[ZetaPolynomial]) -> Vec<ZetaPolynomial> {
    let mut out = vec![ZetaPolynomial::one()];
    for s in 1..cumulants.len() {
        out.push(crate::combin::bell_complete(&cumulants[1..=s]));
    }
    out
}

/// Cumulants of the matching Gumbel-type comparison tail:
/// κ₁ = 0 and κ_s = (−1)^s 2^s (s−1)! ζ(s) for s ≥ 2, indexed by order.
pub fn gumbel_cumulants(s: u32) -> Vec<ZetaPolynomial> {
    let mut out = vec![ZetaPolynomial::zero(), ZetaPolynomial::zero()];
    for t in 2..=s {
        let sign = if t % 2 == 0 { 1 } else { -1 };
        let c = Rational::from(sign)
            * Rational::from(2).pow(i64::from(t)).expect("2 != 0")
            * Rational::from_bigint(factorial(t - 1));
        out.push(ZetaPolynomial::zeta(t).scale(&c));
    }
    out.truncate(s as usize + 1);
    out
}

/// Shifted cumulants a_s = κ_s(Z) + κ_s(G), which must collapse to
/// rational numbers: every zeta monomial cancels between the limit law and
/// the Gumbel tail. A surviving monomial is reported as an inconsistency.
pub fn shifted_cumulants(s: u32) -> Result<Vec<Rational>> {
    let kz = CumulantTable::up_to(s);
    let kg = gumbel_cumulants(s);
    let mut out = Vec::with_capacity(s as usize + 1);
    for t in 0..=s as usize {
        let sum = kz.cumulants[t].add(&kg[t]);
        match sum.as_rational() {
            Some(q) => out.push(q),
            None => {
                return Err(Error::Inconsistency(format!(
                    "shifted cumulant a_{t} keeps zeta terms: {sum}"
                )))
            }
        }
    }
    Ok(out)
}

/// E(C_n) = 2(n+1)H_n − 4n, exactly.
pub fn finite_expectation(n: u32) -> Rational {
    let h = harmonic(n, 1);
    Rational::from(2) * Rational::from(i64::from(n) + 1) * h - Rational::from(4 * i64::from(n))
}

/// E(C_n) from the divide-and-conquer recurrence
/// E(C_n) = n − 1 + (2/n) Σ_{k<n} E(C_k), with prefix sums for O(n) total.
pub fn finite_expectation_recurrence(n: u32) -> Rational {
    let mut prefix = Rational::zero();
    let mut last = Rational::zero();
    for t in 1..=i64::from(n) {
        prefix += &last;
        last = Rational::from(t - 1) + rat(2, t) * prefix.clone();
    }
    last
}

/// Outcome of simulating quicksort comparison counts.
#[derive(Clone, Debug, Serialize)]
pub struct SimulationReport {
    pub n: u32,
    pub runs: u64,
    pub seed: u64,
    pub algorithm: String,
    /// Raw moments E(Z^k), k = 1..4, of Z = (C − E(C_n))/(n+1).
    pub moments: [f64; 4],
}

fn splitmix_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Unbiased sample from 0..bound (Lemire's multiply-shift rejection).
fn bounded(state: &mut u64, bound: u64) -> u64 {
    let mut m = u128::from(splitmix_next(state)) * u128::from(bound);
    let mut low = m as u64;
    if low < bound {
        let threshold = bound.wrapping_neg() % bound;
        while low < threshold {
            m = u128::from(splitmix_next(state)) * u128::from(bound);
            low = m as u64;
        }
    }
    (m >> 64) as u64
}

/// Comparison count of first-element-pivot quicksort (Lomuto partition,
/// len − 1 comparisons per partition call) on the given array.
fn quicksort_comparisons(a: &mut [u64]) -> u64 {
    let mut comparisons = 0u64;
    let mut stack = vec![(0usize, a.len())];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo <= 1 {
            continue;
        }
        comparisons += (hi - lo - 1) as u64;
        let pivot = a[lo];
        let mut store = lo;
        for k in lo + 1..hi {
            if a[k] < pivot {
                store += 1;
                a.swap(k, store);
            }
        }
        a.swap(lo, store);
        stack.push((lo, store));
        stack.push((store + 1, hi));
    }
    comparisons
}

/// Monte Carlo moments of the normalized comparison count. Each run uses
/// an independent deterministic substream, so results depend only on
/// (n, runs, seed).
pub fn simulate(n: u32, runs: u64, seed: u64) -> SimulationReport {
    let expect = finite_expectation(n).to_f64();
    let scale = f64::from(n) + 1.0;
    let mut sums = [0.0f64; 4];
    let mut a: Vec<u64> = Vec::with_capacity(n as usize);
    for r in 0..runs {
        let mut state = seed ^ (r + 1).wrapping_mul(0xD1B54A32D192ED03);
        a.clear();
        a.extend(0..u64::from(n));
        for i in (1..a.len()).rev() {
            let j = bounded(&mut state, (i + 1) as u64) as usize;
            a.swap(i, j);
        }
        let c = quicksort_comparisons(&mut a);
        let z = (c as f64 - expect) / scale;
        let mut p = 1.0;
        for slot in sums.iter_mut() {
            p *= z;
            *slot += p;
        }
    }
    let moments = [
        sums[0] / runs as f64,
        sums[1] / runs as f64,
        sums[2] / runs as f64,
        sums[3] / runs as f64,
    ];
    SimulationReport {
        n,
        runs,
        seed,
        algorithm: "splitmix64-fisher-yates-v1".to_string(),
        moments,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zeta_poly::ZetaPolynomial;

    fn z(k: u32) -> ZetaPolynomial {
        ZetaPolynomial::zeta(k)
    }

    #[test]
    fn entropy_integral_values() {
        assert_eq!(entropy_integral(0, 0, 0), ZetaPolynomial::one());
        assert_eq!(
            entropy_integral(1, 1, 0),
            ZetaPolynomial::constant(rat(1, 6))
        );
        assert!(entropy_integral(0, 0, 1).is_zero());
        assert_eq!(entropy_integral(0, 1, 0).constant_term(), rat(1, 2));
    }

    #[test]
    fn second_moment() {
        let mu2 = qs_moment(2);
        let want = ZetaPolynomial::constant(Rational::from(7)).sub(&z(2).scale(&Rational::from(4)));
        assert_eq!(mu2, want);
    }

    #[test]
    fn moment_weights_stay_bounded() {
        for s in 0..=5 {
            assert!(qs_moment(s).max_weight() <= s, "weight of mu_{s}");
        }
    }

    #[test]
    fn constant_term_routes_agree() {
        for s in 0..=5 {
            assert_eq!(
                qs_constant_term(s, CtRoute::Projection),
                qs_constant_term(s, CtRoute::Recurrence),
                "constant term at s = {s}"
            );
        }
        assert_eq!(qs_constant_term(2, CtRoute::Recurrence), Rational::from(7));
    }

    #[test]
    fn normalized_constant_terms() {
        // c̃_s = (−1)^s c_s/(s!·2^s)
        assert_eq!(qs_normalized_ct(2), rat(7, 8));
        for s in 0..=5u32 {
            let c = qs_constant_term(s, CtRoute::Recurrence);
            let scale = Rational::from_bigint(factorial(s))
                * Rational::from(2).pow(i64::from(s)).unwrap();
            let sign = Rational::from(if s % 2 == 0 { 1 } else { -1 });
            assert_eq!(
                qs_normalized_ct(s),
                sign * c.checked_div(&scale).unwrap(),
                "s = {s}"
            );
        }
    }

    #[test]
    fn cumulant_round_trip() {
        let mu = MomentTable::up_to(5).moments;
        let kappa = cumulants_from_moments(&mu);
        assert!(kappa[1].is_zero());
        // κ₂ = μ₂ − μ₁² = μ₂
        assert_eq!(kappa[2], mu[2]);
        let back = moments_from_cumulants(&kappa);
        assert_eq!(back, mu);
    }

    #[test]
    fn shifted_cumulants_are_rational() {
        let a = shifted_cumulants(5).unwrap();
        assert_eq!(a[2], Rational::from(7));
        assert!(a[1].is_zero());
    }

    #[test]
    fn finite_expectations() {
        assert!(finite_expectation(0).is_zero());
        assert!(finite_expectation(1).is_zero());
        assert_eq!(finite_expectation(2), Rational::one());
        assert_eq!(finite_expectation(3), rat(8, 3));
        for n in 0..=60 {
            assert_eq!(
                finite_expectation(n),
                finite_expectation_recurrence(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn two_element_arrays_need_one_comparison() {
        let report = simulate(2, 50, 9);
        assert_eq!(report.moments, [0.0; 4]);
    }

    #[test]
    fn simulation_is_deterministic() {
        let a = simulate(50, 20, 123);
        let b = simulate(50, 20, 123);
        assert_eq!(a.moments, b.moments);
        let c = simulate(50, 20, 124);
        assert_ne!(a.moments, c.moments);
    }

    #[test]
    fn simulation_tracks_finite_law() {
        // E(Z_n) = 0 exactly; E(Z_n²) = Var(C_n)/(n+1)² with
        // Var(C_n) = 7n² − 4(n+1)²H_n^{(2)} − 2(n+1)H_n + 13n. The 1/n bias
        // against the limit value 7 − 4ζ(2) is still visible at n = 200, so
        // compare against the exact finite-n law.
        let n = 200u32;
        let nn = Rational::from(i64::from(n));
        let np1 = Rational::from(i64::from(n) + 1);
        let var = Rational::from(7) * nn.clone() * nn.clone()
            - Rational::from(4) * np1.clone() * np1.clone() * harmonic(n, 2)
            - Rational::from(2) * np1.clone() * harmonic(n, 1)
            + Rational::from(13) * nn;
        let want = var.checked_div(&(np1.clone() * np1)).unwrap().to_f64();
        let report = simulate(n, 3000, 42);
        assert!(report.moments[0].abs() < 0.05, "mean {}", report.moments[0]);
        assert!(
            (report.moments[1] - want).abs() < 0.05,
            "second moment {} vs exact {want}",
            report.moments[1]
        );
    }

    #[test]
    fn report_serializes() {
        let report = simulate(2, 3, 1);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"n\":2"));
        assert!(json.contains("\"algorithm\":\"splitmix64-fisher-yates-v1\""));
    }
}
