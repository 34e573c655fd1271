//! Exact combinatorial scalars: factorials, Stirling cycle numbers, harmonic
//! numbers, truncated (star) zeta values at repeated 1's, Bell polynomials,
//! Bernoulli numbers, Euler and Legendre polynomial coefficients, the
//! binomial transform, and factorial powers.
//!
//! The truncated values ζ_n({1}_k) and ζ*_n({1}_k) each have an independent
//! closed-form route and a cross-check route (Bell polynomial and product
//! generating function respectively); tests also compare both against direct
//! evaluation of the defining nested sums.

use std::sync::Mutex;
use std::sync::OnceLock;

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

use crate::algebra::rational::Rational;
use crate::algebra::series::rational_expand_1d;
use crate::algebra::Ring;
use crate::error::{Error, Result};

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=i64::from(n) {
        acc *= t;
    }
    acc
}

/// Binomial coefficient with integer arguments.
///
/// Conventions: 0 for k < 0 and for 0 ≤ n < k; for n < 0 ≤ k the standard
/// reflection binom(n,k) = (−1)^k binom(k−n−1, k).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let refl = binomial(k - n - 1, k);
        return if k % 2 == 0 { refl } else { -refl };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 1..=k {
        acc = acc * (n - k + t) / t;
    }
    acc
}

/// Multinomial coefficient (Σ parts)! / ∏ parts!.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total: i64 = 0;
    for &p in parts {
        total += i64::from(p);
        acc *= binomial(total, i64::from(p));
    }
    acc
}

static STIRLING_ROWS: OnceLock<Mutex<Vec<Vec<BigUint>>>> = OnceLock::new();

/// Unsigned Stirling number of the first kind c(n,k): permutations of n
/// elements with k cycles. 0 when k > n; c(0,0) = 1.
pub fn stirling_cycle(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let rows = STIRLING_ROWS.get_or_init(|| Mutex::new(vec![vec![BigUint::one()]]));
    let mut rows = rows.lock().expect("stirling table lock");
    while rows.len() <= n as usize {
        let prev = rows.last().expect("table is never empty");
        let r = rows.len();
        // c(r,j) = c(r-1,j-1) + (r-1)·c(r-1,j)
        let mut row = vec![BigUint::zero(); r + 1];
        for j in 1..=r {
            let mut v = prev[j - 1].clone();
            if j < prev.len() {
                v += BigUint::from(r as u32 - 1) * &prev[j];
            }
            row[j] = v;
        }
        rows.push(row);
    }
    rows[n as usize][k as usize].clone()
}

/// Generalized harmonic number H_n^{(r)} = Σ_{j=1..n} j^{−r}; 0 when n = 0.
pub fn harmonic(n: u32, r: u32) -> Rational {
    let mut acc = Rational::zero();
    for j in 1..=i64::from(n) {
        acc += &Rational::from(j).pow(-i64::from(r)).expect("j >= 1");
    }
    acc
}

/// Truncated zeta value ζ_n({1}_k) = Σ_{n ≥ ℓ₁>⋯>ℓ_k ≥ 1} 1/(ℓ₁⋯ℓ_k),
/// via the Stirling identity ζ_n({1}_k) = c(n+1,k+1)/n!.
///
/// 1 when k = 0, 0 when k > n.
pub fn zt_ones(n: u32, k: u32) -> Rational {
    if k > n {
        return if k == 0 { Rational::one() } else { Rational::zero() };
    }
    Rational::from_bigint(BigInt::from(stirling_cycle(n + 1, k + 1)))
        .checked_div(&Rational::from_bigint(factorial(n)))
        .expect("factorial is nonzero")
}

/// Cross-check route for [`zt_ones`]: the Bell-polynomial form
/// ζ_n({1}_k) = ((−1)^k/k!)·B_k(−0!·H_n^{(1)}, −1!·H_n^{(2)}, …, −(k−1)!·H_n^{(k)}).
pub fn zt_ones_bell(n: u32, k: u32) -> Rational {
    let args: Vec<Rational> = (1..=k)
        .map(|l| -&(harmonic(n, l) * Rational::from_bigint(factorial(l - 1))))
        .collect();
    let b = bell_complete(&args);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    b * Rational::from(sign) * Rational::from_bigint(factorial(k)).recip().expect("k! > 0")
}

/// Truncated zeta star value ζ*_n({1}_k) = Σ_{n ≥ ℓ₁≥⋯≥ℓ_k ≥ 1} 1/(ℓ₁⋯ℓ_k),
/// via the alternating-binomial closed form Σ_{j=1..n} (−1)^{j−1} binom(n,j) j^{−k}.
///
/// 1 when k = 0 (empty index), 0 when n = 0 < k.
pub fn zts_ones(n: u32, k: u32) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 1..=i64::from(n) {
        let term = Rational::from_bigint(binomial(i64::from(n), j))
            * Rational::from(j).pow(-i64::from(k)).expect("j >= 1");
        if j % 2 == 1 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Cross-check route for [`zts_ones`]: coefficient of q^k in the product
/// generating function ∏_{j=1..n} (1 − q/j)^{−1} = n!/∏_{j=1..n}(j − q).
pub fn zts_ones_gf(n: u32, k: u32) -> Rational {
    let den: Vec<Rational> = (1..=i64::from(n)).map(Rational::from).collect();
    let coeffs = rational_expand_1d(&[], &den, k).expect("roots 1..n are nonzero");
    coeffs[k as usize].clone() * Rational::from_bigint(factorial(n))
}

/// Complete Bell polynomial B_s(x₁,…,x_s) with s = args.len(), over any ring,
/// via B_{s+1} = Σ_j binom(s,j) B_{s−j} x_{j+1}.
pub fn bell_complete<R: Ring>(args: &[R]) -> R {
    let s = args.len();
    let mut b: Vec<R> = Vec::with_capacity(s + 1);
    b.push(R::one());
    for t in 0..s {
        // b[t+1] = Σ_{j=0..t} binom(t,j) b[t−j] x_{j+1}
        let mut acc = R::zero();
        for j in 0..=t {
            let c = Rational::from_bigint(binomial(t as i64, j as i64));
            acc = acc.add(&b[t - j].mul(&args[j]).scale(&c));
        }
        b.push(acc);
    }
    b[s].clone()
}

/// Partial (incomplete) Bell polynomial B_{s,j}(x₁,…,x_{s−j+1}), 1 ≤ j ≤ s.
pub fn bell_partial<R: Ring>(s: u32, j: u32, args: &[R]) -> Result<R> {
    if j < 1 || j > s {
        return Err(Error::domain(format!("partial Bell index j={j} outside 1..={s}")));
    }
    let need = (s - j + 1) as usize;
    if args.len() < need {
        return Err(Error::domain(format!(
            "partial Bell B_{{{s},{j}}} needs {need} arguments, got {}",
            args.len()
        )));
    }
    // table[t][u] = B_{t,u}
    let s = s as usize;
    let j = j as usize;
    let mut table = vec![vec![R::zero(); j + 1]; s + 1];
    table[0][0] = R::one();
    for t in 1..=s {
        for u in 1..=j.min(t) {
            let mut acc = R::zero();
            for l in 1..=(t - u + 1).min(args.len()) {
                let c = Rational::from_bigint(binomial(t as i64 - 1, l as i64 - 1));
                acc = acc.add(&args[l - 1].mul(&table[t - l][u - 1]).scale(&c));
            }
            table[t][u] = acc;
        }
    }
    Ok(table[s][j].clone())
}

static BERNOULLI_TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// Bernoulli number B_n with the convention B₁ = −1/2.
pub fn bernoulli(n: u32) -> Rational {
    let table = BERNOULLI_TABLE.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut table = table.lock().expect("bernoulli table lock");
    while table.len() <= n as usize {
        let s = table.len() as i64;
        // Σ_{j=0..s} binom(s+1,j) B_j = 0
        let mut acc = Rational::zero();
        for (j, bj) in table.iter().enumerate() {
            acc += &(Rational::from_bigint(binomial(s + 1, j as i64)) * bj);
        }
        let v = -acc.checked_div(&Rational::from(s + 1)).expect("s+1 > 0");
        table.push(v);
    }
    table[n as usize].clone()
}

/// Coefficients (e_{m,0}, …, e_{m,m}) of the Euler polynomial
/// E_m(x) = Σ_j e_{m,j} x^j, via
/// e_{m,j} = (2/(m+1))·binom(m+1,j)·(1 − 2^{m+1−j})·B_{m+1−j}.
pub fn euler_poly_coeffs(m: u32) -> Vec<Rational> {
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    for j in 0..=m {
        let p = m + 1 - j;
        let two_pow = Rational::from(2).pow(i64::from(p)).expect("positive base");
        let c = Rational::new(2, i64::from(m) + 1).expect("m+1 > 0")
            * Rational::from_bigint(binomial(i64::from(m) + 1, i64::from(j)))
            * (Rational::one() - two_pow)
            * bernoulli(p);
        coeffs.push(c);
    }
    coeffs
}

/// Coefficients (a_{n,0}, …, a_{n,n}) of the Legendre polynomial
/// P_n(x) = 2^{−n} Σ_j (−1)^j binom(n,j) binom(2n−2j,n) x^{n−2j}.
pub fn legendre_coeffs(n: u32) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    let scale = Rational::from(2).pow(-i64::from(n)).expect("2 != 0");
    for j in 0..=n / 2 {
        let nn = i64::from(n);
        let jj = i64::from(j);
        let mut c = Rational::from_bigint(binomial(nn, jj) * binomial(2 * nn - 2 * jj, nn)) * &scale;
        if j % 2 == 1 {
            c = -c;
        }
        coeffs[(n - 2 * j) as usize] = c;
    }
    coeffs
}

/// Binomial transform s_i = Σ_{k=0..i} (−1)^k binom(i,k) a_k, an involution.
pub fn binomial_transform(a: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|i| {
            let mut acc = Rational::zero();
            for (k, ak) in a.iter().enumerate().take(i + 1) {
                let term = Rational::from_bigint(binomial(i as i64, k as i64)) * ak;
                if k % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        })
        .collect()
}

/// Falling factorial power x↓k = x(x−1)⋯(x−k+1) for k ≥ 0, extended to
/// negative order by x↓(−p) = 1/((x+p)↓p) = 1/((x+1)(x+2)⋯(x+p)).
pub fn falling_factorial(x: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        let mut acc = Rational::one();
        for t in 0..k {
            acc *= &(x - &Rational::from(t));
        }
        Ok(acc)
    } else {
        let p = -k;
        let mut acc = Rational::one();
        for t in 1..=p {
            acc *= &(x + &Rational::from(t));
        }
        if acc.is_zero() {
            return Err(Error::domain(format!(
                "falling factorial ({x})^({k}) divides by zero"
            )));
        }
        acc.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use proptest::prelude::*;
    use std::collections::HashMap;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-1, 2), BigInt::one());
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(multinomial(&[]), BigInt::one());
    }

    #[test]
    fn stirling_cycle_table() {
        assert_eq!(stirling_cycle(0, 0), BigUint::one());
        assert_eq!(stirling_cycle(4, 2), BigUint::from(11u32));
        assert_eq!(stirling_cycle(4, 3), BigUint::from(6u32));
        assert_eq!(stirling_cycle(3, 5), BigUint::zero());
        assert_eq!(stirling_cycle(6, 1), BigUint::from(120u32));
        // row sums are n!
        for n in 0..=8u32 {
            let sum: BigUint = (0..=n).map(|k| stirling_cycle(n, k)).sum();
            assert_eq!(BigInt::from(sum), factorial(n));
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(2, 1), rat(3, 2));
        assert_eq!(harmonic(3, 2), rat(49, 36));
        assert_eq!(harmonic(0, 5), Rational::zero());
    }

    /// Direct evaluation of the defining nested sum, memoized on (n,k):
    /// strict descent ℓ₁ > ⋯ > ℓ_k for zt, weak descent for zts.
    fn nested_sum(n: u32, k: u32, strict: bool, memo: &mut HashMap<(u32, u32), Rational>) -> Rational {
        if k == 0 {
            return Rational::one();
        }
        if n == 0 {
            return Rational::zero();
        }
        if let Some(v) = memo.get(&(n, k)) {
            return v.clone();
        }
        let mut acc = Rational::zero();
        for l in 1..=n {
            let inner_cap = if strict { l - 1 } else { l };
            let tail = nested_sum(inner_cap, k - 1, strict, memo);
            acc += &(tail * Rational::from(l as i64).recip().unwrap());
        }
        memo.insert((n, k), acc.clone());
        acc
    }

    #[test]
    fn zt_three_routes_agree() {
        let mut memo = HashMap::new();
        for n in 0..=20u32 {
            for k in 0..=20u32 {
                let a = zt_ones(n, k);
                let b = zt_ones_bell(n, k);
                let c = nested_sum(n, k, true, &mut memo);
                assert_eq!(a, b, "stirling vs bell at ({n},{k})");
                assert_eq!(a, c, "stirling vs nested sum at ({n},{k})");
            }
        }
        assert_eq!(zt_ones(2, 1), rat(3, 2));
        assert_eq!(zt_ones(3, 2), Rational::one());
        assert_eq!(zt_ones(1, 2), Rational::zero());
    }

    #[test]
    fn zts_three_routes_agree() {
        let mut memo = HashMap::new();
        for n in 0..=20u32 {
            for k in 0..=20u32 {
                let a = zts_ones(n, k);
                let b = zts_ones_gf(n, k);
                let c = nested_sum(n, k, false, &mut memo);
                assert_eq!(a, b, "alternating vs GF at ({n},{k})");
                assert_eq!(a, c, "alternating vs nested sum at ({n},{k})");
            }
        }
        assert_eq!(zts_ones(2, 2), rat(7, 4));
        assert_eq!(zts_ones(2, 3), rat(15, 8));
        assert_eq!(zts_ones(5, 0), Rational::one());
    }

    #[test]
    fn zt_recurrence() {
        // ζ_ℓ({1}_m) = ζ_{ℓ−1}({1}_m) + ζ_{ℓ−1}({1}_{m−1})/ℓ
        for l in 1..=20u32 {
            for m in 1..=20u32 {
                let lhs = zt_ones(l, m);
                let rhs = zt_ones(l - 1, m)
                    + zt_ones(l - 1, m - 1) * Rational::from(i64::from(l)).recip().unwrap();
                assert_eq!(lhs, rhs, "recurrence at ({l},{m})");
            }
        }
    }

    fn set_partitions(s: usize) -> Vec<Vec<usize>> {
        // restricted growth strings; returns block sizes of each partition
        fn rec(pos: usize, s: usize, assignment: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if pos == s {
                let blocks = assignment.iter().max().map_or(0, |m| m + 1);
                let mut sizes = vec![0usize; blocks];
                for &a in assignment.iter() {
                    sizes[a] += 1;
                }
                out.push(sizes);
                return;
            }
            let max_used = assignment.iter().max().map_or(0, |m| m + 1);
            for b in 0..=max_used {
                assignment.push(b);
                rec(pos + 1, s, assignment, out);
                assignment.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, s, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn bell_complete_examples_and_oracle() {
        assert_eq!(
            bell_complete(&[Rational::one(), Rational::zero(), Rational::zero()]),
            Rational::one()
        );
        assert_eq!(bell_complete(&[Rational::from(2), Rational::from(3)]), Rational::from(7));
        let args: Vec<Rational> = [2, 3, 5, 7, 11, 13].iter().map(|&p| Rational::from(p as i64)).collect();
        for s in 0..=6usize {
            let direct = bell_complete(&args[..s]);
            let mut oracle = Rational::zero();
            for sizes in set_partitions(s) {
                let mut prod = Rational::one();
                for sz in sizes {
                    prod *= &args[sz - 1];
                }
                oracle += &prod;
            }
            assert_eq!(direct, oracle, "complete Bell at s={s}");
        }
    }

    #[test]
    fn bell_partial_examples_and_oracle() {
        let x = |i: usize| -> Vec<Rational> {
            [2, 3, 5, 7, 11, 13].iter().take(i).map(|&p| Rational::from(p as i64)).collect()
        };
        // B_{3,1} = x₃, B_{3,3} = x₁³
        assert_eq!(bell_partial(3, 1, &x(3)).unwrap(), Rational::from(5));
        assert_eq!(bell_partial(3, 3, &x(3)).unwrap(), Rational::from(8));
        // B_{4,2} = 4x₁x₃ + 3x₂²
        assert_eq!(
            bell_partial(4, 2, &x(3)).unwrap(),
            Rational::from(4 * 2 * 5 + 3 * 9)
        );
        assert!(bell_partial(3, 0, &x(3)).is_err());
        assert!(bell_partial(3, 4, &x(3)).is_err());
        let args = x(6);
        for s in 1..=6u32 {
            let mut total = Rational::zero();
            for j in 1..=s {
                let partial = bell_partial(s, j, &args).unwrap();
                let mut oracle = Rational::zero();
                for sizes in set_partitions(s as usize) {
                    if sizes.len() != j as usize {
                        continue;
                    }
                    let mut prod = Rational::one();
                    for sz in sizes {
                        prod *= &args[sz - 1];
                    }
                    oracle += &prod;
                }
                assert_eq!(partial, oracle, "partial Bell at ({s},{j})");
                total += &partial;
            }
            assert_eq!(total, bell_complete(&args[..s as usize]), "partition by block count at s={s}");
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), Rational::zero());
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    #[test]
    fn euler_polynomials() {
        assert_eq!(euler_poly_coeffs(0), vec![Rational::one()]);
        assert_eq!(euler_poly_coeffs(1), vec![rat(-1, 2), Rational::one()]);
        // E_m(1) + E_m(0) = 2·[m=0]
        for m in 1..=8u32 {
            let e = euler_poly_coeffs(m);
            let at1 = eval_poly(&e, &Rational::one());
            let at0 = eval_poly(&e, &Rational::zero());
            assert_eq!(at1 + at0, Rational::zero(), "reflection identity at m={m}");
        }
    }

    #[test]
    fn euler_coefficient_identity() {
        // Σ_{p=2j..2k+1} binom(2k+1,p) e_{p,2j} + e_{2k+1,2j} = 0
        for k in 0..=5u32 {
            for j in 0..=k {
                let mut acc = Rational::zero();
                for p in (2 * j)..=(2 * k + 1) {
                    let e_p = euler_poly_coeffs(p);
                    acc += &(Rational::from_bigint(binomial(i64::from(2 * k + 1), i64::from(p)))
                        * &e_p[(2 * j) as usize]);
                }
                acc += &euler_poly_coeffs(2 * k + 1)[(2 * j) as usize];
                assert_eq!(acc, Rational::zero(), "identity at (k={k}, j={j})");
            }
        }
    }

    #[test]
    fn legendre_polynomials() {
        assert_eq!(legendre_coeffs(1), vec![Rational::zero(), Rational::one()]);
        assert_eq!(legendre_coeffs(2), vec![rat(-1, 2), Rational::zero(), rat(3, 2)]);
        for n in 0..=8u32 {
            let p = legendre_coeffs(n);
            assert_eq!(eval_poly(&p, &Rational::one()), Rational::one(), "P_{n}(1) = 1");
        }
    }

    #[test]
    fn binomial_transform_examples() {
        let ones = vec![Rational::one(); 4];
        assert_eq!(
            binomial_transform(&ones),
            vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()]
        );
        let powers: Vec<Rational> = [1, 2, 4, 8].iter().map(|&v| Rational::from(v as i64)).collect();
        let expect: Vec<Rational> = [1, -1, 1, -1].iter().map(|&v| Rational::from(v as i64)).collect();
        assert_eq!(binomial_transform(&powers), expect);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(&Rational::from(5), 2).unwrap(), Rational::from(20));
        assert_eq!(falling_factorial(&rat(7, 3), 0).unwrap(), Rational::one());
        assert_eq!(falling_factorial(&Rational::from(2), -1).unwrap(), rat(1, 3));
        assert_eq!(falling_factorial(&rat(1, 2), 2).unwrap(), rat(-1, 4));
        assert!(falling_factorial(&Rational::from(-1), -1).is_err());
        // inverse law: x↓k · (x−k)↓(−k) = 1 when defined
        let x = rat(9, 2);
        for k in 1..=4i64 {
            let a = falling_factorial(&x, k).unwrap();
            let b = falling_factorial(&(&x - &Rational::from(k)), -k).unwrap();
            assert_eq!(a * b, Rational::one());
        }
    }

    proptest! {
        #[test]
        fn binomial_transform_is_involution(
            seq in proptest::collection::vec((-50i64..50, 1i64..20), 0..30)
        ) {
            let a: Vec<Rational> = seq.into_iter().map(|(n, d)| rat(n, d)).collect();
            prop_assert_eq!(binomial_transform(&binomial_transform(&a)), a);
        }
    }
}
