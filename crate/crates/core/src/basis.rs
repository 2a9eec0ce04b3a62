//! Unperturbed d-dimensional isotropic oscillator: quantum numbers, energies
//! and radial eigenfunctions.
//!
//! Units are dimensionless throughout (hbar = m = omega = 1). The radial
//! eigenfunction in the squared-radius variable `eta = r^2` is
//!
//! ```text
//! u_{nl}(eta) = A_{nl} eta^{(l+1)/2} e^{-eta/2} L_n^{(l + d/2 - 1)}(eta)
//! A_{nl}^2    = 2 n! / Gamma(n + l + d/2)
//! ```
//!
//! For `d = 1` the radial picture degenerates. The state is then labelled by
//! the level `N` with `l = 0` and a formal radial number `n = N/2`, which the
//! closed-form and recursion modules accept but the eigenfunction evaluators
//! reject.

use std::fmt;

use num::{One, Zero};
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::numeric::{self, Precision};
use crate::rational::{from_u64, rat, Rational};

/// `(d, n, l)` labelling an unperturbed radial eigenstate.
///
/// The radial number is stored doubled so that the half-integer values used
/// for `d = 1` are representable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    d: u32,
    twice_n: u64,
    l: u32,
}

impl QuantumNumbers {
    /// State with integer radial number `n`. For `d = 1` this is level `N = 2n`.
    pub fn new(d: u32, n: u64, l: u32) -> Result<Self> {
        Self::from_twice_n(d, 2 * n, l)
    }

    pub fn from_twice_n(d: u32, twice_n: u64, l: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidQuantumNumbers("dimension must be at least 1".into()));
        }
        if d == 1 && l != 0 {
            return Err(Error::InvalidQuantumNumbers(format!("l must be 0 in one dimension, got {l}")));
        }
        if d >= 2 && twice_n % 2 != 0 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "radial number must be an integer for d={d}, got {twice_n}/2"
            )));
        }
        Ok(QuantumNumbers { d, twice_n, l })
    }

    /// One-dimensional level `N`, i.e. `l = 0`, `n = N/2`.
    pub fn one_dimensional(level: u64) -> Self {
        QuantumNumbers { d: 1, twice_n: level, l: 0 }
    }

    /// State with `N = 2n + l` and the given `l`.
    pub fn from_level(d: u32, level: u64, l: u32) -> Result<Self> {
        if d == 1 {
            if l != 0 {
                return Err(Error::InvalidQuantumNumbers(format!("l must be 0 in one dimension, got {l}")));
            }
            return Ok(Self::one_dimensional(level));
        }
        let l64 = u64::from(l);
        if l64 > level || (level - l64) % 2 != 0 {
            return Err(Error::InvalidQuantumNumbers(format!("l={l} is not allowed at N={level}")));
        }
        Self::new(d, (level - l64) / 2, l)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn twice_n(&self) -> u64 {
        self.twice_n
    }

    pub fn n(&self) -> Rational {
        rat(self.twice_n as i64, 2)
    }

    /// The radial number when it is an integer.
    pub fn n_integer(&self) -> Option<u64> {
        (self.twice_n % 2 == 0).then_some(self.twice_n / 2)
    }

    /// Principal level `N = 2n + l`.
    pub fn level(&self) -> u64 {
        self.twice_n + u64::from(self.l)
    }

    /// Laguerre parameter `l + d/2 - 1`.
    pub fn alpha(&self) -> Rational {
        rat(2 * i64::from(self.l) + i64::from(self.d) - 2, 2)
    }

    /// Same `d` and `l` with radial number shifted by `delta`; `None` below zero.
    pub fn shifted(&self, delta: i64) -> Option<Self> {
        let twice = self.twice_n as i64 + 2 * delta;
        (twice >= 0).then_some(QuantumNumbers { twice_n: twice as u64, ..*self })
    }

    /// One-dimensional states are handled only formally.
    pub fn is_formal(&self) -> bool {
        self.d == 1
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "(d=1, N={})", self.twice_n)
        } else {
            write!(f, "(d={}, n={}, l={})", self.d, self.twice_n / 2, self.l)
        }
    }
}

/// `E / (hbar omega) = 2n + l + d/2`.
pub fn energy_unperturbed(q: &QuantumNumbers) -> Rational {
    rat(2 * q.twice_n as i64 + 2 * i64::from(q.l) + i64::from(q.d), 2)
}

/// Same as [`energy_unperturbed`] with the radial number given doubled.
pub(crate) fn energy_at(q: &QuantumNumbers, twice_k: i64) -> Rational {
    rat(2 * twice_k + 2 * i64::from(q.l) + i64::from(q.d), 2)
}

/// Monomial coefficients of `L_n^(alpha)(x) = sum_i c_i x^i`:
/// `c_i = (-1)^i binom(n + alpha, n - i) / i!`.
pub fn laguerre_coefficients(n: u64, alpha: &Rational) -> Vec<Rational> {
    let n_plus_alpha = from_u64(n) + alpha;
    (0..=n)
        .map(|i| {
            let k = n - i;
            // generalized binomial (n+alpha choose k)
            let mut binom = Rational::one();
            for j in 0..k {
                binom *= &n_plus_alpha - from_u64(j);
                binom /= from_u64(j + 1);
            }
            let mut fact = Rational::one();
            for j in 2..=i {
                fact *= from_u64(j);
            }
            let c = binom / fact;
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

/// Power-series coefficients `a_0..=a_{i_max}` of `f(r)` with `a_0 = 1`.
///
/// Two-term recursion `(i+2)(i+d+2l) a_{i+2} = (2i + 2l + d - 2E) a_i` with `E`
/// the unperturbed energy; odd coefficients vanish and the series terminates
/// after `a_{2n}`.
pub fn series_coefficients(q: &QuantumNumbers, i_max: usize) -> Result<Vec<Rational>> {
    if q.d < 2 {
        return Err(Error::UnsupportedDimension { d: q.d, operation: "series_coefficients" });
    }
    let two_e = energy_unperturbed(q) * Rational::from_integer(2.into());
    let d = i64::from(q.d);
    let l = i64::from(q.l);
    let mut a = vec![Rational::zero(); i_max + 1];
    a[0] = Rational::one();
    for i in 0..i_max.saturating_sub(1) {
        if a[i].is_zero() {
            continue;
        }
        let ii = i as i64;
        let numer = Rational::from_integer((2 * ii + 2 * l + d).into()) - &two_e;
        let denom = Rational::from_integer(((ii + 2) * (ii + d + 2 * l)).into());
        a[i + 2] = &a[i] * numer / denom;
    }
    Ok(a)
}

/// `A_{nl}^2` as an exact rational, times `pi^{-1/2}` when `n + l + d/2` is a
/// half-integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationSquared {
    pub rational: Rational,
    pub inv_sqrt_pi: bool,
}

impl NormalizationSquared {
    pub fn to_float(&self, bits: u32) -> Float {
        let value = numeric::float(bits, &self.rational);
        if self.inv_sqrt_pi {
            value / numeric::pi(bits).sqrt()
        } else {
            value
        }
    }
}

fn factorial(k: u64) -> Rational {
    (2..=k).fold(Rational::one(), |acc, j| acc * from_u64(j))
}

pub fn normalization_squared(q: &QuantumNumbers) -> Result<NormalizationSquared> {
    let n = q.n_integer().filter(|_| q.d >= 2).ok_or(Error::UnsupportedDimension {
        d: q.d,
        operation: "normalization_squared",
    })?;
    let two = from_u64(2);
    let l = u64::from(q.l);
    if q.d % 2 == 0 {
        // Gamma(k) = (k-1)!
        let k = n + l + u64::from(q.d) / 2;
        Ok(NormalizationSquared { rational: two * factorial(n) / factorial(k - 1), inv_sqrt_pi: false })
    } else {
        // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
        let k = n + l + (u64::from(q.d) - 1) / 2;
        let gamma_rational = factorial(2 * k) / (num::pow(from_u64(4), k as usize) * factorial(k));
        Ok(NormalizationSquared { rational: two * factorial(n) / gamma_rational, inv_sqrt_pi: true })
    }
}

/// Radial eigenfunction `u_{nl}` with exact polynomial part.
#[derive(Clone, Debug)]
pub struct RadialEigenfunction {
    q: QuantumNumbers,
    coefficients: Vec<Rational>,
    normalization: NormalizationSquared,
}

/// `u`, `du/dr` and `d2u/dr2` at one radius.
#[derive(Clone, Debug)]
pub struct RadialDerivatives {
    pub value: Float,
    pub first: Float,
    pub second: Float,
}

impl RadialEigenfunction {
    pub fn new(q: QuantumNumbers) -> Result<Self> {
        if q.d < 2 {
            return Err(Error::UnsupportedDimension { d: q.d, operation: "radial eigenfunction" });
        }
        let n = q.n_integer().expect("integer radial number for d >= 2");
        Ok(RadialEigenfunction {
            coefficients: laguerre_coefficients(n, &q.alpha()),
            normalization: normalization_squared(&q)?,
            q,
        })
    }

    pub fn quantum_numbers(&self) -> &QuantumNumbers {
        &self.q
    }

    /// Coefficients of `L_n^(alpha)` in powers of `eta`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn normalization_squared(&self) -> &NormalizationSquared {
        &self.normalization
    }

    fn radial_number(&self) -> u64 {
        self.q.twice_n / 2
    }

    /// `u_{nl}(eta)`.
    pub fn eval(&self, eta: &Float) -> Float {
        let bits = eta.prec();
        let alpha = numeric::float(bits, &self.q.alpha());
        let amp = self.normalization.to_float(bits).sqrt();
        let power = Float::with_val(bits, f64::from(self.q.l + 1) / 2.0);
        let mut value = Float::with_val(bits, eta.pow(&power));
        value *= Float::with_val(bits, -(eta.clone()) / 2u32).exp();
        value *= numeric::laguerre(self.radial_number(), &alpha, eta);
        value * amp
    }

    /// `u` and its first two derivatives with respect to `r` at `r = sqrt(eta)`.
    ///
    /// Uses `dL_n^a/dx = -L_{n-1}^{a+1}` and `d2L_n^a/dx2 = L_{n-2}^{a+2}`.
    pub fn derivatives_in_r(&self, eta: &Float) -> RadialDerivatives {
        let bits = eta.prec();
        let n = self.radial_number();
        let alpha = numeric::float(bits, &self.q.alpha());
        let amp = self.normalization.to_float(bits).sqrt();
        let r = Float::with_val(bits, eta.sqrt_ref());
        let lp1 = Float::with_val(bits, self.q.l + 1);

        // p(r) = r^{l+1} e^{-r^2/2}
        let mut p = Float::with_val(bits, (&r).pow(self.q.l + 1));
        p *= Float::with_val(bits, -(eta.clone()) / 2u32).exp();
        let k = Float::with_val(bits, &lp1 / &r) - &r;
        let p1 = Float::with_val(bits, &p * &k);
        let k2 = Float::with_val(bits, &k * &k) - Float::with_val(bits, &lp1 / eta) - 1u32;
        let p2 = Float::with_val(bits, &p * &k2);

        // g(r) = L(r^2)
        let g = numeric::laguerre(n, &alpha, eta);
        let dl = if n >= 1 {
            -numeric::laguerre(n - 1, &Float::with_val(bits, &alpha + 1u32), eta)
        } else {
            Float::with_val(bits, 0)
        };
        let ddl = if n >= 2 {
            numeric::laguerre(n - 2, &Float::with_val(bits, &alpha + 2u32), eta)
        } else {
            Float::with_val(bits, 0)
        };
        let g1 = Float::with_val(bits, 2 * Float::with_val(bits, &r * &dl));
        let g2 = Float::with_val(bits, 2 * &dl) + Float::with_val(bits, 4 * Float::with_val(bits, eta * &ddl));

        let value = Float::with_val(bits, &p * &g) * &amp;
        let first = (Float::with_val(bits, &p1 * &g) + Float::with_val(bits, &p * &g1)) * &amp;
        let second = (Float::with_val(bits, &p2 * &g)
            + Float::with_val(bits, 2 * Float::with_val(bits, &p1 * &g1))
            + Float::with_val(bits, &p * &g2))
            * &amp;
        RadialDerivatives { value, first, second }
    }
}

/// `u_{nl}(eta)` at the given precision.
pub fn u_eval(q: &QuantumNumbers, eta: f64, precision: Precision) -> Result<Float> {
    if eta < 0.0 || !eta.is_finite() {
        return Err(Error::Domain(format!("eta must be finite and non-negative, got {eta}")));
    }
    let f = RadialEigenfunction::new(*q)?;
    Ok(f.eval(&Float::with_val(precision.bits(), eta)))
}
