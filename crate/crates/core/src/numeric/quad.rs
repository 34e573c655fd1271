//! Adaptive tanh-sinh quadrature over (0,1).
//!
//! The substitution x(t) = 1/(1 + e^{2u}), u = (π/2) sinh t, turns ∫₀¹ f dx
//! into a doubly-exponentially decaying trapezoid sum, which converges at
//! roughly double the digits per level halving even when f has logarithmic
//! or integrable power singularities at the endpoints. Since x(−t) = 1 − x(t)
//! and the weight is even in t, nodes are generated for t ≥ 0 only and each
//! carries both x and 1 − x, with ln x and ln(1 − x) precomputed and cached
//! per (level, precision).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use astro_float::BigFloat;

use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::logint::LogIntegralKey;
use crate::numeric::real::{NumericValue, RealCtx};

const MAX_LEVEL: u32 = 11;

/// One abscissa t ≥ 0 of the transformed trapezoid rule, with the pair of
/// mirror points it represents.
struct QuadNode {
    x: BigFloat,
    omx: BigFloat,
    lnx: BigFloat,
    lnomx: BigFloat,
    w: BigFloat,
}

static NODE_CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<Vec<QuadNode>>>>> = OnceLock::new();

/// Nodes introduced at `level`: all integer multiples of 1/2 at level 0,
/// odd multiples of 2^{−level−1} afterwards, until the weight drops below
/// the noise floor of the working precision.
fn build_level(level: u32, ctx: &mut RealCtx) -> Vec<QuadNode> {
    let cut = ctx.pow10(-(i64::from(ctx.digits()) + 13));
    let half_pi = {
        let pi = ctx.pi();
        let two = ctx.from_i64(2);
        ctx.div(&pi, &two)
    };
    let pi = ctx.pi();
    let denom = 1i64 << (level + 1);
    let mut nodes = Vec::new();
    let mut k: i64 = if level == 0 { 0 } else { 1 };
    let step: i64 = if level == 0 { 1 } else { 2 };
    loop {
        let t = ctx.from_rational(&Rational::new(k, denom).expect("positive denom"));
        let e_t = ctx.exp(&t);
        let inv_e_t = ctx.recip(&e_t);
        let two = ctx.from_i64(2);
        let sinh = ctx.div(&ctx.sub(&e_t, &inv_e_t), &two);
        let cosh = ctx.div(&ctx.add(&e_t, &inv_e_t), &two);
        let u2 = ctx.mul(&ctx.mul(&half_pi, &sinh), &two);
        let big_e = ctx.exp(&u2);
        let den = ctx.add(&ctx.from_i64(1), &big_e);
        let x = ctx.recip(&den);
        let omx = ctx.mul(&big_e, &x);
        let mut w = ctx.mul(&ctx.mul(&pi, &cosh), &ctx.mul(&big_e, &ctx.mul(&x, &x)));
        if ctx.abs_lt(&w, &cut) {
            break;
        }
        if level == 0 && k == 0 {
            // the t = 0 node is its own mirror, so it enters the folded
            // sum once instead of twice
            w = ctx.div(&w, &two);
        }
        let lnx = ctx.ln(&x);
        let lnomx = ctx.ln(&omx);
        nodes.push(QuadNode { x, omx, lnx, lnomx, w });
        k += step;
    }
    nodes
}

fn nodes(level: u32, ctx: &mut RealCtx) -> Arc<Vec<QuadNode>> {
    let key = (level, ctx.bits());
    let cache = NODE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("node cache lock").get(&key) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build_level(level, ctx));
    cache
        .lock()
        .expect("node cache lock")
        .insert(key, Arc::clone(&built));
    built
}

/// a^e with the convention that e = 0 contributes nothing (skips the
/// factor even when a underflowed to zero).
fn fpow(ctx: &RealCtx, a: &BigFloat, e: i64) -> Option<BigFloat> {
    if e == 0 {
        None
    } else {
        Some(ctx.powi(a, e))
    }
}

fn mul_opt(ctx: &RealCtx, acc: BigFloat, f: Option<BigFloat>) -> BigFloat {
    match f {
        Some(v) => ctx.mul(&acc, &v),
        None => acc,
    }
}

/// Run the level cascade until two successive refinements agree to
/// relative 10^{1−prec}; `g` must return f(x) + f(1−x) for a node.
fn integrate<F>(prec: u32, context: &str, mut g: F) -> Result<(BigFloat, RealCtx)>
where
    F: FnMut(&QuadNode, &mut RealCtx) -> BigFloat,
{
    let mut ctx = RealCtx::new(prec + 25);
    let tol = ctx.pow10(1 - i64::from(prec));
    let floor = ctx.pow10(-i64::from(prec));
    let mut sum = ctx.zero();
    let mut prev: Option<BigFloat> = None;
    for level in 0..=MAX_LEVEL {
        let nds = nodes(level, &mut ctx);
        for nd in nds.iter() {
            let val = g(nd, &mut ctx);
            sum = ctx.add(&sum, &ctx.mul(&nd.w, &val));
        }
        let h = Rational::new(1, 1i64 << (level + 1)).expect("positive denom");
        let estimate = ctx.mul(&ctx.from_rational(&h), &sum);
        if let Some(p) = &prev {
            if level >= 4 {
                let diff = ctx.abs(&ctx.sub(&estimate, p));
                let mag = ctx.abs(&estimate);
                let scale = if ctx.abs_lt(&mag, &floor) { &floor } else { &mag };
                if ctx.abs_lt(&diff, &ctx.mul(&tol, scale)) {
                    return Ok((estimate, ctx));
                }
            }
        }
        prev = Some(estimate);
    }
    let best = prev.expect("at least one level ran");
    let best = ctx.decimal(&best, prec);
    Err(Error::AccuracyFailure {
        context: format!("tanh-sinh quadrature for {context}"),
        best,
    })
}

/// ∫₀¹ xⁱ lnⁿ(x) lnᵐ(1−x) dx by quadrature, for any key on which the
/// integral converges.
pub fn quad_logint(n: u32, m: u32, i: i64, prec: u32) -> Result<NumericValue> {
    LogIntegralKey::new(n, m, i)?;
    let (raw, mut ctx) = integrate(prec, &format!("I({n},{m},{i})"), |nd, ctx| {
        let mut a = ctx.from_i64(1);
        a = mul_opt(ctx, a, fpow(ctx, &nd.lnx, i64::from(n)));
        a = mul_opt(ctx, a, fpow(ctx, &nd.lnomx, i64::from(m)));
        a = mul_opt(ctx, a, fpow(ctx, &nd.x, i));
        let mut b = ctx.from_i64(1);
        b = mul_opt(ctx, b, fpow(ctx, &nd.lnomx, i64::from(n)));
        b = mul_opt(ctx, b, fpow(ctx, &nd.lnx, i64::from(m)));
        b = mul_opt(ctx, b, fpow(ctx, &nd.omx, i));
        ctx.add(&a, &b)
    })?;
    Ok(NumericValue::new(raw, prec, &mut ctx))
}

/// ∫₀¹ xⁱ lnⁿ(x) lnᵐ(1−x)/(1−x) dx by quadrature; requires n ≥ 1, the
/// range on which the integral converges without regularization.
pub fn quad_variant(n: u32, m: u32, i: i64, prec: u32) -> Result<NumericValue> {
    if n == 0 {
        return Err(Error::domain(
            "variant quadrature needs n >= 1: at n = 0 only the regularized value exists",
        ));
    }
    if i < 0 {
        return Err(Error::domain(format!(
            "variant quadrature needs i >= 0, got {i}"
        )));
    }
    let (raw, mut ctx) = integrate(prec, &format!("C({n},{m},{i})"), |nd, ctx| {
        let mut a = ctx.from_i64(1);
        a = mul_opt(ctx, a, fpow(ctx, &nd.lnx, i64::from(n)));
        a = mul_opt(ctx, a, fpow(ctx, &nd.lnomx, i64::from(m)));
        a = mul_opt(ctx, a, fpow(ctx, &nd.x, i));
        a = ctx.div(&a, &nd.omx);
        let mut b = ctx.from_i64(1);
        b = mul_opt(ctx, b, fpow(ctx, &nd.lnomx, i64::from(n)));
        b = mul_opt(ctx, b, fpow(ctx, &nd.lnx, i64::from(m)));
        b = mul_opt(ctx, b, fpow(ctx, &nd.omx, i));
        b = ctx.div(&b, &nd.x);
        ctx.add(&a, &b)
    })?;
    Ok(NumericValue::new(raw, prec, &mut ctx))
}

/// ∫₀¹ x^{k₁} (1−x)^{k₂} C(x)^{k₃} dx with C(x) = 1 + 2x ln x + 2(1−x) ln(1−x),
/// the building block of the recursive moment computation.
pub fn quad_entropy(k1: u32, k2: u32, k3: u32, prec: u32) -> Result<NumericValue> {
    let (raw, mut ctx) = integrate(prec, &format!("E({k1},{k2},{k3})"), |nd, ctx| {
        let two = ctx.from_i64(2);
        let mix = ctx.add(&ctx.mul(&nd.x, &nd.lnx), &ctx.mul(&nd.omx, &nd.lnomx));
        let c = ctx.add(&ctx.from_i64(1), &ctx.mul(&two, &mix));
        let cpow = fpow(ctx, &c, i64::from(k3));
        let mut a = ctx.from_i64(1);
        a = mul_opt(ctx, a, fpow(ctx, &nd.x, i64::from(k1)));
        a = mul_opt(ctx, a, fpow(ctx, &nd.omx, i64::from(k2)));
        a = mul_opt(ctx, a, cpow.clone());
        let mut b = ctx.from_i64(1);
        b = mul_opt(ctx, b, fpow(ctx, &nd.x, i64::from(k2)));
        b = mul_opt(ctx, b, fpow(ctx, &nd.omx, i64::from(k1)));
        b = mul_opt(ctx, b, cpow);
        ctx.add(&a, &b)
    })?;
    Ok(NumericValue::new(raw, prec, &mut ctx))
}

/// ∫₀¹ xⁱ lnⁿ(x) lnᵐ(1−zx) dx for 0 < z < 1 by quadrature.
pub fn quad_nielsen(n: u32, m: u32, i: i64, z: &Rational, prec: u32) -> Result<NumericValue> {
    if z.is_negative() || z.is_zero() || *z >= Rational::one() {
        return Err(Error::domain(format!(
            "nielsen quadrature needs 0 < z < 1, got {z}"
        )));
    }
    if i < -1 || (i == -1 && m == 0) {
        return Err(Error::domain(format!(
            "nielsen quadrature needs i >= -1 (with m >= 1 at i = -1), got n={n} m={m} i={i}"
        )));
    }
    let (raw, mut ctx) = {
        let zctx = RealCtx::new(prec + 25);
        let zbf = zctx.from_rational(z);
        integrate(prec, &format!("N({n},{m},{i};{z})"), move |nd, ctx| {
            let one = ctx.from_i64(1);
            let lnarg_x = ctx.ln(&ctx.sub(&one, &ctx.mul(&zbf, &nd.x)));
            let lnarg_omx = ctx.ln(&ctx.sub(&one, &ctx.mul(&zbf, &nd.omx)));
            let mut a = ctx.from_i64(1);
            a = mul_opt(ctx, a, fpow(ctx, &nd.lnx, i64::from(n)));
            a = mul_opt(ctx, a, fpow(ctx, &lnarg_x, i64::from(m)));
            a = mul_opt(ctx, a, fpow(ctx, &nd.x, i));
            let mut b = ctx.from_i64(1);
            b = mul_opt(ctx, b, fpow(ctx, &nd.lnomx, i64::from(n)));
            b = mul_opt(ctx, b, fpow(ctx, &lnarg_omx, i64::from(m)));
            b = mul_opt(ctx, b, fpow(ctx, &nd.omx, i));
            ctx.add(&a, &b)
        })?
    };
    Ok(NumericValue::new(raw, prec, &mut ctx))
}
