//! Method I: even radial moments from the d-dimensional Kramers-Pasternak
//! recursion, and the first-order correction built from `<r^4>`.
//!
//! In dimensionless units the recursion reads
//!
//! ```text
//! (2s+4) <r^{s+2}> - 2E (2s+2) <r^s> + [2s (d-3+l(l+d-2)) + (s/2)(4-d-s)(4-d+s)] <r^{s-2}> = 0
//! ```
//!
//! At `s = 0` the last coefficient vanishes, so the recursion seeds itself
//! from `<r^0> = 1`. Everything here is exact.

use crate::basis::{energy_unperturbed, QuantumNumbers};
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// `<r^power>` in units of `(hbar / m omega)^{power/2}`.
///
/// `formal` marks one-dimensional values obtained by substituting `d = 1`,
/// `l = 0`, `n = N/2` into the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialMoment {
    pub q: QuantumNumbers,
    pub power: u32,
    pub value: Rational,
    pub formal: bool,
}

fn c(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `<r^2> = 2n + l + d/2`.
pub fn moment_r2(q: &QuantumNumbers) -> Rational {
    energy_unperturbed(q)
}

/// `<r^power>` for an even, non-negative power.
pub fn radial_moment(q: &QuantumNumbers, power: u32) -> Result<RadialMoment> {
    if power % 2 != 0 {
        return Err(Error::Domain(format!("odd moment r^{power} is not produced by the recursion")));
    }
    let d = i64::from(q.d());
    let l = i64::from(q.l());
    let energy = energy_unperturbed(q);
    let centrifugal = d - 3 + l * (l + d - 2);

    // (<r^{s-2}>, <r^s>) starting at s = 0
    let mut lower = Rational::from_integer(0.into());
    let mut current = Rational::from_integer(1.into());
    let mut s = 0i64;
    while s < i64::from(power) {
        let tail = c(2 * s * centrifugal) + rat(s * (4 - d - s) * (4 - d + s), 2);
        let next = (c(2) * &energy * c(2 * s + 2) * &current - tail * &lower) / c(2 * s + 4);
        lower = std::mem::replace(&mut current, next);
        s += 2;
    }
    Ok(RadialMoment { q: *q, power, value: current, formal: q.is_formal() })
}

/// `<r^{s+2}>` produced by one application of the recursion at index `s`.
pub fn moment_r_even(q: &QuantumNumbers, s: i64) -> Result<RadialMoment> {
    if s < 0 {
        return Err(Error::Unsupported(format!("negative index s={s} needs an <r^-2> seed")));
    }
    if s % 2 != 0 {
        return Err(Error::Domain(format!("index s={s} must be even")));
    }
    radial_moment(q, s as u32 + 2)
}

/// `epsilon1 = -<r^4>/8`.
pub fn first_order_method1(q: &QuantumNumbers) -> Rational {
    let r4 = radial_moment(q, 4).expect("even power");
    -r4.value / c(8)
}
