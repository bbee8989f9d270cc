//! Exact rational scalars.
//!
//! Everything exact in this crate is built on [`Rational`], an arbitrary
//! precision fraction kept in lowest terms with a positive denominator.
//! Text forms are `p/q` or a bare integer; decimal notation is rejected so a
//! parameter can never silently pick up a binary rounding error.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}` (expected `p/q` or an integer)")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `p/q`, `-p/q`, `p` or `-p`. Whitespace around the tokens is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |s: &str| -> Result<BigInt, ParseRationalError> {
        let s = s.trim();
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Invalid(text.to_string()));
        }
        s.parse::<BigInt>()
            .map_err(|_| ParseRationalError::Invalid(text.to_string()))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical exact text: always `p/q`, including `q = 1`.
pub fn format_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short form for humans: `p` when integral, `p/q` otherwise.
pub fn format_short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_exact(r)
    }
}

/// Short form followed by a decimal approximation, e.g. `3/7 (0.428571)`.
pub fn format_pretty(r: &Rational) -> String {
    if r.is_integer() && r.numer().bits() < 40 {
        return r.numer().to_string();
    }
    let approx = if r.is_zero() {
        "0".to_string()
    } else {
        let ln = ln_abs(r);
        if ln.abs() < 30.0 {
            format!("{:.6}", to_f64(r))
        } else {
            let log10 = ln / std::f64::consts::LN_10;
            let exp = log10.floor();
            let mant = 10f64.powf(log10 - exp);
            let sign = if r.is_negative() { "-" } else { "" };
            format!("{sign}{mant:.6}e{exp}")
        }
    };
    let short = format_short(r);
    if short.len() > 48 {
        format!("<{} digits> ({approx})", r.numer().to_string().trim_start_matches('-').len())
    } else {
        format!("{short} ({approx})")
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Nearest f64; saturates to ±inf for values outside the f64 range.
pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let ln = ln_abs(r);
    let v = ln.exp();
    if r.is_negative() {
        -v
    } else {
        v
    }
}

/// Natural log of |r|, usable far outside the f64 range. `-inf` for zero.
pub fn ln_abs(r: &Rational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_abs_int(r.numer()) - ln_abs_int(r.denom())
}

fn ln_abs_int(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.abs().to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top = (v.abs() >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

pub fn neg_one_pow(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}
