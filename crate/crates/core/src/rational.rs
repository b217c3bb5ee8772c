//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Lowest terms, positive denominator, always with a slash: `"-2/945"`,
/// `"2/1"`.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer.
pub fn parse_pq(s: &str) -> Result<Rational> {
    let bad = || Error::invalid(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Display-only decimal with 12 significant digits.
pub fn to_decimal(r: &Rational) -> f64 {
    let x = r.to_f64().unwrap_or(f64::NAN);
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let digits = 12 - 1 - x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits);
    (x * scale).round() / scale
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_pq(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        assert_eq!(to_pq(&ratio(4, -6)), "-2/3");
        assert_eq!(to_pq(&int(2)), "2/1");
        assert_eq!(parse_pq("-2/945").unwrap(), ratio(-2, 945));
        assert_eq!(parse_pq("7").unwrap(), int(7));
        assert!(parse_pq("1/0").is_err());
        assert!(parse_pq("x").is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&ratio(1, 3)), 0.333333333333);
        assert_eq!(to_decimal(&ratio(-2, 945)), -0.00211640211640);
    }
}
