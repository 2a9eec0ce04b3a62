//! Exact rational helpers shared by every formula module.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in canonical form
//! (reduced, positive denominator). Output is always rendered as `p/q`, with a
//! decimal view that is labelled approximate by callers.

use std::cmp::Ordering;

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_u64(value: u64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Renders `p/q`; integers keep an explicit `/1`.
pub fn to_pq(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Parses `p/q`, a plain integer, or a finite decimal such as `0.001` or `1e-3`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = || Error::Parse { what: "rational", input: input.to_string() };
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| err())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let joined = format!("{whole}{frac}");
    let mut numer: BigInt = if joined.is_empty() { BigInt::zero() } else { joined.parse().map_err(|_| err())? };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Exact square root when `value` is the square of a rational.
pub fn sqrt_exact(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let p = value.numer().sqrt();
    let q = value.denom().sqrt();
    if &(&p * &p) == value.numer() && &(&q * &q) == value.denom() {
        Some(Rational::new(p, q))
    } else {
        None
    }
}

fn pow10(exp: u64) -> BigInt {
    num::pow(BigInt::from(10u32), exp as usize)
}

/// Compares `a/b` against `10^e` for positive integers `a`, `b`.
fn cmp_pow10(a: &BigInt, b: &BigInt, e: i64) -> Ordering {
    if e >= 0 {
        a.cmp(&(b * pow10(e as u64)))
    } else {
        (a * pow10((-e) as u64)).cmp(b)
    }
}

/// Decimal rendering with `sig` significant digits, rounded half away from zero.
///
/// Deterministic and exact: no floating-point conversion is involved. Very
/// large or small magnitudes switch to scientific notation.
pub fn to_decimal(value: &Rational, sig: usize) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if value.is_zero() {
        return "0".to_string();
    }
    let negative = value.is_negative();
    let a = value.numer().abs();
    let b = value.denom().clone();

    let digits_of = |x: &BigInt| x.to_string().len() as i64;
    let mut e = digits_of(&a) - digits_of(&b);
    loop {
        if cmp_pow10(&a, &b, e) == Ordering::Less {
            e -= 1;
        } else if cmp_pow10(&a, &b, e + 1) != Ordering::Less {
            e += 1;
        } else {
            break;
        }
    }

    // mantissa = round(a/b * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (a * pow10(shift as u64), b)
    } else {
        (a, b * pow10((-shift) as u64))
    };
    let (q, r) = num.div_rem(&den);
    let mut mantissa = if (&r * 2u32) >= den { q + 1u32 } else { q };
    if mantissa == pow10(sig as u64) {
        mantissa = pow10(sig as u64 - 1);
        e += 1;
    }
    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len(), sig);

    let body = if !(-6..=20).contains(&e) {
        let (lead, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{lead}e{e}")
        } else {
            format!("{lead}.{rest}e{e}")
        }
    } else if e >= sig as i64 - 1 {
        format!("{digits}{}", "0".repeat((e - (sig as i64 - 1)) as usize))
    } else if e >= 0 {
        let (int_part, frac) = digits.split_at(e as usize + 1);
        format!("{int_part}.{frac}")
    } else {
        format!("0.{}{digits}", "0".repeat((-e - 1) as usize))
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Sign of a rational as -1, 0 or +1.
pub fn signum(value: &Rational) -> i8 {
    match value.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}
