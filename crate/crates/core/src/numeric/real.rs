//! Arbitrary-precision real arithmetic context and decimal rendering.
//!
//! Wraps astro-float with a fixed working precision chosen from a requested
//! decimal digit count plus guard digits, so callers state precision once
//! and every operation uses it consistently.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num::bigint::BigInt;
use num::Signed;
use serde::Serialize;

use crate::algebra::rational::Rational;

/// Working context: precision in bits, rounding mode, and the shared
/// constants cache needed by exp/ln/pi.
pub struct RealCtx {
    bits: usize,
    rm: RoundingMode,
    cc: Consts,
    digits: u32,
}

impl RealCtx {
    /// Context able to deliver `digits` decimal digits; carries 12 guard
    /// digits plus extra headroom internally.
    pub fn new(digits: u32) -> Self {
        let working = digits as usize + 12;
        let bits = (working as f64 * std::f64::consts::LOG2_10).ceil() as usize + 16;
        RealCtx {
            bits,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constants cache"),
            digits,
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_i64(0, self.bits)
    }

    pub fn from_i64(&self, x: i64) -> BigFloat {
        BigFloat::from_i64(x, self.bits)
    }

    pub fn from_u64(&self, x: u64) -> BigFloat {
        BigFloat::from_u64(x, self.bits)
    }

    pub fn from_bigint(&self, x: &BigInt) -> BigFloat {
        let (_, limbs) = x.to_u32_digits();
        let base = BigFloat::from_u64(1u64 << 32, self.bits);
        let mut acc = self.zero();
        for limb in limbs.iter().rev() {
            acc = acc.mul(&base, self.bits, self.rm);
            acc = acc.add(&BigFloat::from_u64(u64::from(*limb), self.bits), self.bits, self.rm);
        }
        if x.is_negative() {
            acc = acc.neg();
        }
        acc
    }

    pub fn from_rational(&self, q: &Rational) -> BigFloat {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        n.div(&d, self.bits, self.rm)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, self.rm)
    }

    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        a.reciprocal(self.bits, self.rm)
    }

    /// a^e for any integer exponent (negative exponents via reciprocal).
    pub fn powi(&self, a: &BigFloat, e: i64) -> BigFloat {
        if e >= 0 {
            a.powi(e as usize, self.bits, self.rm)
        } else {
            self.recip(&a.powi((-e) as usize, self.bits, self.rm))
        }
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.bits, self.rm, &mut self.cc)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.bits, self.rm, &mut self.cc)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.bits, self.rm)
    }

    pub fn abs(&self, a: &BigFloat) -> BigFloat {
        a.abs()
    }

    /// |a| < |b|
    pub fn abs_lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(
            a.abs().partial_cmp(&b.abs()),
            Some(std::cmp::Ordering::Less)
        )
    }

    /// 10^e as a float, for tolerance thresholds.
    pub fn pow10(&self, e: i64) -> BigFloat {
        self.powi(&self.from_i64(10), e)
    }

    pub fn to_f64(&mut self, a: &BigFloat) -> f64 {
        if a.is_zero() {
            return 0.0;
        }
        if a.is_nan() {
            return f64::NAN;
        }
        if a.is_inf_pos() {
            return f64::INFINITY;
        }
        if a.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        self.decimal(a, 17).parse::<f64>().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` significant digits. Plain positional
    /// form for moderate magnitudes, scientific form otherwise; half-up
    /// rounding on the digit string.
    pub fn decimal(&mut self, a: &BigFloat, digits: u32) -> String {
        let digits = digits.max(1) as usize;
        if a.is_zero() {
            return "0".into();
        }
        if a.is_nan() {
            return "nan".into();
        }
        if a.is_inf_pos() {
            return "inf".into();
        }
        if a.is_inf_neg() {
            return "-inf".into();
        }
        let raw = a
            .format(Radix::Dec, self.rm, &mut self.cc)
            .expect("decimal format");
        let (neg, mantissa, mut exp10) = split_scientific(&raw);
        let (rounded, carried) = round_digit_string(&mantissa, digits);
        if carried {
            exp10 += 1;
        }
        render_decimal(neg, &rounded, exp10)
    }
}

/// Split astro-float's "±d.ddd...e±X" output into sign, digit string, and
/// decimal exponent of the leading digit.
fn split_scientific(s: &str) -> (bool, String, i64) {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (mant, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().expect("exponent field")),
        None => (body, 0),
    };
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    // The point sits after the first digit, so the exponent of the leading
    // digit is the printed exponent, adjusted if the integer part has more
    // than one digit (it never does for astro-float, but stay defensive).
    let int_len = mant.split('.').next().map_or(1, |p| p.len().max(1)) as i64;
    (neg, digits, exp + int_len - 1)
}

/// Round a digit string to `digits` significant digits, half-up. Returns
/// the rounded digits and whether a carry lengthened the number.
fn round_digit_string(ds: &str, digits: usize) -> (String, bool) {
    let mut v: Vec<u8> = ds.bytes().map(|b| b - b'0').collect();
    if v.len() <= digits {
        v.resize(digits, 0);
        return (v.iter().map(|d| (d + b'0') as char).collect(), false);
    }
    let round_up = v[digits] >= 5;
    v.truncate(digits);
    let mut carried = false;
    if round_up {
        let mut i = digits;
        loop {
            if i == 0 {
                v.insert(0, 1);
                v.pop();
                carried = true;
                break;
            }
            i -= 1;
            if v[i] == 9 {
                v[i] = 0;
            } else {
                v[i] += 1;
                break;
            }
        }
    }
    (v.iter().map(|d| (d + b'0') as char).collect(), carried)
}

/// Assemble a decimal string from sign, significant digits, and the
/// exponent of the leading digit.
fn render_decimal(neg: bool, digits: &str, exp10: i64) -> String {
    let sign = if neg { "-" } else { "" };
    let positional = (-5..=14).contains(&exp10)
        || (exp10 >= 0 && (exp10 as usize) < digits.len());
    if positional {
        if exp10 >= 0 {
            let int_len = (exp10 + 1) as usize;
            if digits.len() <= int_len {
                let mut int = digits.to_string();
                int.push_str(&"0".repeat(int_len - digits.len()));
                format!("{sign}{int}")
            } else {
                format!("{sign}{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            let zeros = "0".repeat((-exp10 - 1) as usize);
            format!("{sign}0.{zeros}{digits}")
        }
    } else if digits.len() == 1 {
        format!("{sign}{digits}e{exp10}")
    } else {
        format!("{sign}{}.{}e{exp10}", &digits[..1], &digits[1..])
    }
}

/// A high-precision value rendered at its requested decimal precision.
/// The raw float is kept for further computation; serialization uses the
/// rendered string so reports are backend-independent.
#[derive(Clone, Debug, Serialize)]
pub struct NumericValue {
    pub value: String,
    pub prec: u32,
    #[serde(skip)]
    pub(crate) raw: BigFloat,
}

impl NumericValue {
    pub fn new(raw: BigFloat, prec: u32, ctx: &mut RealCtx) -> Self {
        let value = ctx.decimal(&raw, prec);
        NumericValue { value, prec, raw }
    }

    pub fn raw(&self) -> &BigFloat {
        &self.raw
    }

    pub fn to_f64(&self) -> f64 {
        self.value.parse::<f64>().unwrap_or(f64::NAN)
    }
}

impl std::fmt::Display for NumericValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.value)
    }
}
