//! Numeric evaluation of exact zeta polynomials.

use astro_float::BigFloat;

use crate::algebra::zeta_poly::ZetaPolynomial;
use crate::numeric::real::{NumericValue, RealCtx};
use crate::numeric::zeta_num::zeta_raw;

/// Substitute numeric ζ(k) into every monomial at working precision.
/// Terms are added in the polynomial's canonical monomial order, so the
/// result is deterministic for a given precision.
pub(crate) fn eval_raw(p: &ZetaPolynomial, ctx: &RealCtx) -> BigFloat {
    let mut acc = ctx.zero();
    for (mono, coeff) in p.iter() {
        let mut term = ctx.from_rational(coeff);
        for (k, e) in mono.powers() {
            let z = zeta_raw(k, ctx);
            term = ctx.mul(&term, &ctx.powi(&z, i64::from(e)));
        }
        acc = ctx.add(&acc, &term);
    }
    acc
}

/// Evaluate an exact polynomial in zeta values to `prec` significant digits.
pub fn eval_zeta_polynomial(p: &ZetaPolynomial, prec: u32) -> NumericValue {
    let mut ctx = RealCtx::new(prec);
    let raw = eval_raw(p, &ctx);
    NumericValue::new(raw, prec, &mut ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rational};

    #[test]
    fn constants_evaluate_to_themselves() {
        let p = ZetaPolynomial::constant(rat(-31, 16));
        let v = eval_zeta_polynomial(&p, 12);
        assert_eq!(v.value, "-1.93750000000");
    }

    #[test]
    fn second_moment_value() {
        // 7 - 4 zeta(2) = 0.42026373...
        let p = ZetaPolynomial::constant(Rational::from(7))
            .sub(&ZetaPolynomial::zeta(2).scale(&Rational::from(4)));
        let v = eval_zeta_polynomial(&p, 15);
        assert_eq!(v.value, "0.420263732607094");
    }

    #[test]
    fn zero_polynomial() {
        let v = eval_zeta_polynomial(&ZetaPolynomial::zero(), 10);
        assert_eq!(v.value, "0");
        assert_eq!(v.to_f64(), 0.0);
    }

    #[test]
    fn products_of_generators() {
        // zeta(2)^2 = 5/2 zeta(4) under the shuffle relation; numerically
        // both sides must agree even though the ring keeps them distinct.
        let sq = ZetaPolynomial::zeta(2).mul(&ZetaPolynomial::zeta(2));
        let quartic = ZetaPolynomial::zeta(4).scale(&rat(5, 2));
        let a = eval_zeta_polynomial(&sq, 25);
        let b = eval_zeta_polynomial(&quartic, 25);
        assert_eq!(a.value, b.value);
    }
}
