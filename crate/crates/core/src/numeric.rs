//! Extended-precision real arithmetic used by eigenfunction evaluation and the
//! quadrature oracle.

use num::bigint::Sign;
use rug::float::Constant;
use rug::{Float, Integer};

use crate::rational::Rational;

/// Working precision in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub const DEFAULT_DIGITS: u32 = 60;

    pub fn digits(digits: u32) -> Self {
        Precision { digits: digits.max(17) }
    }

    pub fn decimal_digits(&self) -> u32 {
        self.digits
    }

    /// Mantissa bits: digits * log2(10) plus a few guard bits.
    pub fn bits(&self) -> u32 {
        (f64::from(self.digits) * std::f64::consts::LOG2_10).ceil() as u32 + 8
    }

    /// Unit roundoff at this precision, as an f64.
    pub fn epsilon(&self) -> f64 {
        2f64.powi(-(self.bits() as i32))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::digits(Self::DEFAULT_DIGITS)
    }
}

fn big_to_integer(value: &num::BigInt) -> Integer {
    let (sign, digits) = value.to_u32_digits();
    let mut out = Integer::from_digits(&digits, rug::integer::Order::Lsf);
    if sign == Sign::Minus {
        out = -out;
    }
    out
}

pub fn to_rug(value: &Rational) -> rug::Rational {
    rug::Rational::from((big_to_integer(value.numer()), big_to_integer(value.denom())))
}

pub fn float(bits: u32, value: &Rational) -> Float {
    Float::with_val(bits, to_rug(value))
}

pub fn pi(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi)
}

/// Gamma at a positive integer or half-integer `twice_x / 2`.
///
/// Built by upward recursion from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).
pub fn gamma_half_integer(twice_x: u64, bits: u32) -> Float {
    assert!(twice_x > 0, "gamma argument must be positive");
    let (mut value, mut x2) = if twice_x % 2 == 0 {
        (Float::with_val(bits, 1), 2u64)
    } else {
        (pi(bits).sqrt(), 1u64)
    };
    while x2 < twice_x {
        value *= Float::with_val(bits, x2) / 2u32;
        x2 += 2;
    }
    value
}

/// `L_n^(alpha)(x)` by the three-term recurrence in `n`.
pub fn laguerre(n: u64, alpha: &Float, x: &Float) -> Float {
    let bits = x.prec().max(alpha.prec());
    let mut prev = Float::with_val(bits, 1);
    if n == 0 {
        return prev;
    }
    let mut cur = Float::with_val(bits, alpha + 1u32);
    cur -= x;
    for k in 1..n {
        let mut a = Float::with_val(bits, 2 * k + 1);
        a += alpha;
        a -= x;
        let mut b = Float::with_val(bits, k);
        b += alpha;
        let next = (a * &cur - b * &prev) / (k + 1);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn to_f64(value: &Float) -> f64 {
    value.to_f64()
}

/// Scientific notation with `digits` significant digits, e.g. `1.50e0`.
pub fn to_scientific(value: &Float, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn gamma_values() {
        let bits = Precision::default().bits();
        let g = gamma_half_integer(1, bits);
        assert!((g.to_f64() - std::f64::consts::PI.sqrt()).abs() < 1e-15);
        assert_eq!(gamma_half_integer(10, bits).to_f64(), 24.0);
        // Gamma(5/2) = 3 sqrt(pi) / 4
        let g52 = gamma_half_integer(5, bits).to_f64();
        assert!((g52 - 0.75 * std::f64::consts::PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn laguerre_small_orders() {
        let bits = 128;
        let alpha = float(bits, &rat(1, 2));
        let x = Float::with_val(bits, 2);
        // L_1^(1/2)(x) = 3/2 - x
        assert_eq!(laguerre(1, &alpha, &x).to_f64(), -0.5);
        // L_2^(0)(1) = 1 - 2 + 1/2
        let zero = Float::with_val(bits, 0);
        let one = Float::with_val(bits, 1);
        assert!((laguerre(2, &zero, &one).to_f64() + 0.5).abs() < 1e-30);
    }

    #[test]
    fn precision_bits() {
        assert!(Precision::digits(50).bits() >= 166);
        assert_eq!(Precision::default().decimal_digits(), 60);
    }

    #[test]
    fn rational_conversion() {
        let big = rat(-123456789, 1000);
        assert_eq!(to_rug(&big), rug::Rational::from((-123456789, 1000)));
    }
}
