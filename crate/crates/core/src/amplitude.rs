//! Signed square-root amplitudes.
//!
//! Matrix elements in both the Laguerre and the ladder-operator methods are
//! square roots of rationals. An [`Amplitude`] stores the sign together with
//! the exact squared magnitude so that every downstream quantity, which only
//! ever needs the square, stays rational.

use std::fmt;
use std::ops::Mul;

use num::{One, Signed, Zero};
use rug::Float;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Amplitude {
    sign: i8,
    square: Rational,
}

impl Amplitude {
    pub fn zero() -> Self {
        Amplitude { sign: 0, square: Rational::zero() }
    }

    pub fn one() -> Self {
        Amplitude { sign: 1, square: Rational::one() }
    }

    /// `sign * sqrt(square)`. The sign is ignored when `square` is zero.
    ///
    /// Panics if `square` is negative or `sign` is zero with a non-zero square.
    pub fn new(sign: i8, square: Rational) -> Self {
        assert!(!square.is_negative(), "squared magnitude must be non-negative");
        if square.is_zero() {
            return Self::zero();
        }
        assert!(sign != 0, "non-zero amplitude needs a sign");
        Amplitude { sign: sign.signum(), square }
    }

    /// Positive square root of `square`.
    pub fn sqrt(square: Rational) -> Self {
        Self::new(1, square)
    }

    /// Negative square root of `square`.
    pub fn neg_sqrt(square: Rational) -> Self {
        Self::new(-1, square)
    }

    pub fn from_rational(value: &Rational) -> Self {
        Self::new(rational::signum(value), value * value)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn negated(&self) -> Self {
        Amplitude { sign: -self.sign, square: self.square.clone() }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self::new(self.sign * rational::signum(factor), &self.square * factor * factor)
    }

    /// The signed value, when it is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        rational::sqrt_exact(&self.square).map(|r| if self.sign < 0 { -r } else { r })
    }

    pub fn to_float(&self, bits: u32) -> Float {
        let sq = Float::with_val(bits, crate::numeric::to_rug(&self.square));
        let mag = sq.sqrt();
        if self.sign < 0 {
            -mag
        } else {
            mag
        }
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * rational::to_f64(&self.square).sqrt()
    }

    /// Exact sum of amplitudes that share one radical.
    ///
    /// Every non-zero term must be a rational multiple of the first one's
    /// radical, i.e. the ratio of squared magnitudes is a rational square.
    pub fn try_sum<'a, I>(terms: I) -> Result<Amplitude>
    where
        I: IntoIterator<Item = &'a Amplitude>,
    {
        let mut reference: Option<&Rational> = None;
        let mut total = Rational::zero();
        for term in terms {
            if term.is_zero() {
                continue;
            }
            let base = *reference.get_or_insert(&term.square);
            let ratio = &term.square / base;
            let factor = rational::sqrt_exact(&ratio).ok_or_else(|| {
                Error::IncompatibleRadical(format!(
                    "sqrt({}) is not a rational multiple of sqrt({})",
                    rational::to_pq(&term.square),
                    rational::to_pq(base)
                ))
            })?;
            if term.sign > 0 {
                total += factor;
            } else {
                total -= factor;
            }
        }
        Ok(match reference {
            None => Amplitude::zero(),
            Some(base) => Amplitude::new(rational::signum(&total), base * &total * &total),
        })
    }
}

impl Mul for &Amplitude {
    type Output = Amplitude;

    fn mul(self, rhs: &Amplitude) -> Amplitude {
        Amplitude::new(self.sign * rhs.sign, &self.square * &rhs.square)
    }
}

impl Mul for Amplitude {
    type Output = Amplitude;

    fn mul(self, rhs: Amplitude) -> Amplitude {
        &self * &rhs
    }
}

impl fmt::Display for Amplitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        match self.to_rational() {
            Some(r) => write!(f, "{}", rational::to_pq(&r)),
            None => {
                let sign = if self.sign < 0 { "-" } else { "" };
                write!(f, "{sign}sqrt({})", rational::to_pq(&self.square))
            }
        }
    }
}
