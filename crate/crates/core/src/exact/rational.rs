//! Rational scalars: parsing, canonical text form, and decimal rendering.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p/q"`, `"p"` or an exact decimal such as `"-1.9"` / `"2.5e-3"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{whole}{frac}");
    let magnitude: BigInt = joined.parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10u8);
    let mut value = if scale >= 0 {
        Rational::from_integer(magnitude * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(magnitude, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Canonical `"p/q"` (or `"p"` when `q = 1`).
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Decimal expansion truncated toward zero to `digits` places after the point.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u8), digits);
    let scaled = (r.numer().abs() * &scale) / r.denom();
    let mut body = scaled.to_string();
    if body.len() <= digits {
        body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
    }
    let split = body.len() - digits;
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{body}")
    } else {
        format!("{sign}{}.{}", &body[..split], &body[split..])
    }
}

/// Rational within `10^-digits` below `sqrt(r)` (exact when `r` is a square
/// of a terminating decimal). `r` must be nonnegative.
pub fn sqrt_lower(r: &Rational, digits: usize) -> Result<Rational> {
    if r.is_negative() {
        return Err(Error::Domain(format!("square root of negative {r}")));
    }
    // floor(sqrt(r * 10^(2 digits))) / 10^digits
    let scale = num_traits::pow(BigUint::from(10u8), digits);
    let num = r.numer().to_biguint().unwrap_or_default();
    let den = r.denom().to_biguint().unwrap_or_default();
    let radicand = (num * &scale * &scale) / den;
    let root = radicand.sqrt();
    Ok(Rational::new(BigInt::from_biguint(Sign::Plus, root), BigInt::from_biguint(Sign::Plus, scale)))
}

/// Number of decimal places to which `a` and `b` agree, i.e. the largest
/// `k ≤ 60` with `|a - b| < 10^-k / 2`.
pub fn agreeing_decimals(a: &Rational, b: &Rational) -> usize {
    let diff = (a - b).abs();
    let mut bound = Rational::new(One::one(), BigInt::from(2u8));
    let tenth = Rational::new(One::one(), BigInt::from(10u8));
    let mut k = 0;
    while k < 60 {
        let next = &bound * &tenth;
        if diff >= next {
            break;
        }
        bound = next;
        k += 1;
    }
    if diff >= Rational::new(One::one(), BigInt::from(2u8)) {
        0
    } else {
        k
    }
}

/// Lowest common multiple of all denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
