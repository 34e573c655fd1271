//! Structured verdicts for exact-versus-oracle checks.

use serde::Serialize;

use crate::algebra::zeta_poly::ZetaPolynomial;
use crate::numeric::eval::eval_raw;
use crate::numeric::real::{NumericValue, RealCtx};

/// One verification line: an exact value rendered numerically next to an
/// independently computed oracle, with the error that separates them.
#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub label: String,
    pub exact_rendered: NumericValue,
    pub oracle: NumericValue,
    /// Relative error, except absolute when the exact value is zero (or
    /// numerically indistinguishable from it), where relative error loses
    /// meaning.
    pub relative_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

fn report(
    label: String,
    exact_raw: astro_float::BigFloat,
    oracle_raw: astro_float::BigFloat,
    exact_is_zero: bool,
    tol: f64,
    prec: u32,
) -> ComparisonReport {
    let mut ctx = RealCtx::new(prec);
    let diff = ctx.abs(&ctx.sub(&exact_raw, &oracle_raw));
    let mag = ctx.abs(&exact_raw);
    let absolute = exact_is_zero || ctx.abs_lt(&mag, &ctx.pow10(1 - i64::from(prec)));
    let err_raw = if absolute { diff } else { ctx.div(&diff, &mag) };
    let relative_error = ctx.to_f64(&err_raw);
    let passed = relative_error <= tol;
    ComparisonReport {
        label,
        exact_rendered: NumericValue::new(exact_raw, prec, &mut ctx),
        oracle: NumericValue::new(oracle_raw, prec, &mut ctx),
        relative_error,
        tolerance: tol,
        passed,
    }
}

/// Compare an exact polynomial in zeta values against a numeric oracle at
/// the oracle's precision.
pub fn compare(
    label: impl Into<String>,
    exact: &ZetaPolynomial,
    oracle: &NumericValue,
    tol: f64,
) -> ComparisonReport {
    let prec = oracle.prec;
    let ctx = RealCtx::new(prec);
    let exact_raw = eval_raw(exact, &ctx);
    report(
        label.into(),
        exact_raw,
        oracle.raw().clone(),
        exact.is_zero(),
        tol,
        prec,
    )
}

/// Compare two numeric values, treating the first as the reference for
/// relative error.
pub fn compare_numeric(
    label: impl Into<String>,
    reference: &NumericValue,
    oracle: &NumericValue,
    tol: f64,
) -> ComparisonReport {
    let prec = reference.prec.min(oracle.prec);
    report(
        label.into(),
        reference.raw().clone(),
        oracle.raw().clone(),
        false,
        tol,
        prec,
    )
}

/// Check that a quantity which should vanish is below an absolute bound.
pub fn compare_residual(label: impl Into<String>, value: &NumericValue, tol: f64) -> ComparisonReport {
    let prec = value.prec;
    let ctx = RealCtx::new(prec);
    report(
        label.into(),
        ctx.zero(),
        value.raw().clone(),
        true,
        tol,
        prec,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::Rational;
    use crate::numeric::zeta_num::zeta_numeric;

    fn second_moment() -> ZetaPolynomial {
        ZetaPolynomial::constant(Rational::from(7))
            .sub(&ZetaPolynomial::zeta(2).scale(&Rational::from(4)))
    }

    #[test]
    fn agreement_passes() {
        let mut ctx = RealCtx::new(20);
        let z2 = crate::numeric::zeta_num::zeta_raw(2, &ctx);
        let oracle = NumericValue::new(
            ctx.sub(&ctx.from_i64(7), &ctx.mul(&ctx.from_i64(4), &z2)),
            20,
            &mut ctx,
        );
        let rep = compare("second moment", &second_moment(), &oracle, 1e-15);
        assert!(rep.passed, "{rep:?}");
        assert!(rep.relative_error <= 1e-15);
    }

    #[test]
    fn disagreement_fails() {
        let oracle = zeta_numeric(2, 20).unwrap();
        let rep = compare("wrong oracle", &second_moment(), &oracle, 1e-9);
        assert!(!rep.passed);
        assert!(rep.relative_error > 1.0);
    }

    #[test]
    fn zero_reference_uses_absolute_error() {
        let mut ctx = RealCtx::new(15);
        let oracle = NumericValue::new(ctx.pow10(-12), 15, &mut ctx);
        let rep = compare("vanishing", &ZetaPolynomial::zero(), &oracle, 1e-9);
        assert!(rep.passed);
        let strict = compare("vanishing", &ZetaPolynomial::zero(), &oracle, 1e-13);
        assert!(!strict.passed);
    }

    #[test]
    fn residual_check() {
        let mut ctx = RealCtx::new(15);
        let small = NumericValue::new(ctx.pow10(-11), 15, &mut ctx);
        assert!(compare_residual("residual", &small, 1e-9).passed);
        assert!(!compare_residual("residual", &small, 1e-12).passed);
    }

    #[test]
    fn reports_serialize() {
        let oracle = zeta_numeric(2, 12).unwrap();
        let rep = compare("zeta(2)", &ZetaPolynomial::zeta(2), &oracle, 1e-10);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"passed\":true"));
        assert!(json.contains("\"label\":\"zeta(2)\""));
    }
}
