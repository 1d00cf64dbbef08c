//! Exact rationals and their `"p/q"` text form.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}")]
pub struct ParseRationalError(pub String);

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact value of a finite float. Panics on NaN or infinity.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Always `p/q` in lowest terms with a positive denominator, `"5/1"` for integers.
pub fn to_ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q`, an integer, or a plain decimal such as `2.75` or `-0.5`.
pub fn parse(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.into());
    let t = text.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, fracpart) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && fracpart.is_empty() {
        return Err(err());
    }
    let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(whole) || !digits_ok(fracpart) {
        return Err(err());
    }
    let mut numer: BigInt = if whole.is_empty() { BigInt::zero() } else { whole.parse().map_err(|_| err())? };
    let mut denom = BigInt::one();
    for b in fracpart.bytes() {
        numer = numer * 10 + BigInt::from(b - b'0');
        denom *= 10;
    }
    if neg {
        numer = -numer;
    }
    Ok(Rational::new(numer, denom))
}

/// Fixed-point decimal rendering with `places` digits, truncated toward zero.
pub fn to_decimal_string(r: &Rational, places: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let whole = a.trunc().to_integer();
    let mut rest = a.fract();
    let mut s = if neg { format!("-{whole}") } else { format!("{whole}") };
    if places > 0 {
        s.push('.');
        for _ in 0..places {
            rest *= int(10);
            let d = rest.trunc().to_integer();
            s.push_str(&format!("{d}"));
            rest = rest.fract();
        }
    }
    s
}
