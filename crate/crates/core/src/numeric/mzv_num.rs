//! Independent numeric multiple zeta values.
//!
//! ζ(i₁,…,i_k) = Σ_{ℓ₁>⋯>ℓ_k≥1} ∏ ℓ_j^{−i_j} is evaluated through the
//! convolution identity obtained by splitting its iterated-integral
//! representation at 1/2: encode the index as the word x^{i₁−1}y⋯x^{i_k−1}y,
//! then
//!
//!   ζ(w) = Σ_{j=0}^{|w|} It(w[j..]) · It(σ(rev(w[..j]))),
//!
//! where σ swaps x and y and It(u), for u = x^{c₁}y⋯x^{c_r}y, is the
//! multiple polylogarithm Σ_{ℓ₁>⋯>ℓ_r≥1} 2^{−ℓ₁} ∏ ℓ_j^{−(c_j+1)}. Every
//! factor converges geometrically, so truncation error is controlled by a
//! crude 2^{−M} majorant rather than the 1/M of direct summation. The route
//! shares nothing with the symbolic reductions it cross-checks.

use astro_float::BigFloat;

use crate::error::{Error, Result};
use crate::numeric::real::{NumericValue, RealCtx};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Letter {
    X,
    Y,
}

/// Word encoding x^{i₁−1} y ⋯ x^{i_k−1} y of an admissible index.
fn encode(index: &[u32]) -> Vec<Letter> {
    let mut word = Vec::new();
    for &i in index {
        for _ in 1..i {
            word.push(Letter::X);
        }
        word.push(Letter::Y);
    }
    word
}

/// Run-length exponents of a word ending in y: x^{c₁}y⋯x^{c_r}y ↦ [c₁+1,…,c_r+1].
fn run_exponents(word: &[Letter]) -> Vec<i64> {
    debug_assert!(word.last().map_or(true, |&l| l == Letter::Y));
    let mut exps = Vec::new();
    let mut run = 0i64;
    for &l in word {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                exps.push(run + 1);
                run = 0;
            }
        }
    }
    exps
}

/// Σ_{ℓ₁>⋯>ℓ_r≥1, ℓ₁≤M} 2^{−ℓ₁} ∏ ℓ_j^{−e_j} by one upward sweep:
/// q[j] accumulates the inner sums over ℓ_{j+1} > ⋯ > ℓ_r below the
/// current ℓ, so each ℓ contributes 2^{−ℓ} ℓ^{−e₁} q[1] before q is
/// advanced (in ascending j, so every update reads pre-advance state).
fn polylog_half(exps: &[i64], terms: u32, ctx: &RealCtx) -> BigFloat {
    let r = exps.len();
    if r == 0 {
        return ctx.from_i64(1);
    }
    let mut q = vec![ctx.zero(); r + 1];
    q[r] = ctx.from_i64(1);
    let half = ctx.from_rational(&crate::algebra::rational::rat(1, 2));
    let mut half_pow = ctx.from_i64(1);
    let mut acc = ctx.zero();
    for l in 1..=i64::from(terms) {
        half_pow = ctx.mul(&half_pow, &half);
        let inv = ctx.recip(&ctx.from_i64(l));
        let head = ctx.mul(&half_pow, &ctx.mul(&ctx.powi(&inv, exps[0]), &q[1]));
        acc = ctx.add(&acc, &head);
        for j in 1..r {
            let step = ctx.mul(&ctx.powi(&inv, exps[j]), &q[j + 1]);
            q[j] = ctx.add(&q[j], &step);
        }
    }
    acc
}

/// ζ(index) at working precision; index must be admissible.
pub(crate) fn mzv_raw(index: &[u32], ctx: &RealCtx) -> Result<BigFloat> {
    if index.is_empty() {
        return Err(Error::domain("empty zeta index"));
    }
    if index[0] < 2 {
        return Err(Error::domain(format!(
            "divergent zeta index {index:?}: leading entry must be >= 2"
        )));
    }
    if index.iter().any(|&i| i == 0) {
        return Err(Error::domain(format!("zeta index {index:?} has a zero entry")));
    }
    // 2^{-M} (1 + ln M)^{r-1} margin comfortably below 10^{-digits}
    let terms = (f64::from(ctx.digits() + 12) * 3.33).ceil() as u32 + 50;
    let word = encode(index);
    let n = word.len();
    let mut acc = ctx.zero();
    for j in 0..=n {
        let suffix = run_exponents(&word[j..]);
        let flipped: Vec<Letter> = word[..j]
            .iter()
            .rev()
            .map(|&l| if l == Letter::X { Letter::Y } else { Letter::X })
            .collect();
        let prefix = run_exponents(&flipped);
        let term = ctx.mul(
            &polylog_half(&suffix, terms, ctx),
            &polylog_half(&prefix, terms, ctx),
        );
        acc = ctx.add(&acc, &term);
    }
    Ok(acc)
}

/// ζ(index) to relative 10^{1−prec}, by a route independent of the
/// symbolic reductions.
pub fn mzv_numeric(index: &[u32], prec: u32) -> Result<NumericValue> {
    let mut ctx = RealCtx::new(prec);
    let raw = mzv_raw(index, &ctx)?;
    Ok(NumericValue::new(raw, prec, &mut ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::zeta_num::zeta_numeric;

    #[test]
    fn depth_one_matches_zeta() {
        for k in 2..=6 {
            let a = mzv_numeric(&[k], 28).unwrap();
            let b = zeta_numeric(k, 28).unwrap();
            assert_eq!(a.value, b.value, "zeta({k})");
        }
    }

    #[test]
    fn euler_sum_identity() {
        // ζ(2,1) = ζ(3)
        let a = mzv_numeric(&[2, 1], 28).unwrap();
        let b = zeta_numeric(3, 28).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn weight_four_values() {
        // ζ(3,1) = ζ(4)/4 and ζ(2,1,1) = ζ(4)
        let ctx = RealCtx::new(28);
        let z31 = mzv_raw(&[3, 1], &ctx).unwrap();
        let z4 = crate::numeric::zeta_num::zeta_raw(4, &ctx);
        let want = ctx.div(&z4, &ctx.from_i64(4));
        let diff = ctx.sub(&z31, &want);
        assert!(ctx.abs_lt(&diff, &ctx.pow10(-25)));

        let a = mzv_numeric(&[2, 1, 1], 28).unwrap();
        let b = zeta_numeric(4, 28).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn rejects_divergent_indices() {
        assert!(mzv_numeric(&[1, 2], 10).is_err());
        assert!(mzv_numeric(&[], 10).is_err());
        assert!(mzv_numeric(&[2, 0], 10).is_err());
    }
}
