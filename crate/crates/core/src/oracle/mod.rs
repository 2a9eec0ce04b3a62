//! Brute-force numerical checks by high-precision Gauss-Laguerre quadrature,
//! independent of every exact recursion in the crate.
//!
//! In the variable `eta = r^2` the expectation of `f` under the radial
//! measure becomes
//!
//! ```text
//! <f> = int (A^2 / 2) eta^alpha e^{-eta} L_n^alpha(eta)^2 f(eta) d eta,   alpha = l + d/2 - 1
//! ```
//!
//! which generalized Gauss-Laguerre integrates exactly for polynomial `f`.

pub mod quadrature;

pub use quadrature::{gauss_laguerre, QuadratureRule};

use rug::ops::Pow;
use rug::Float;

use crate::basis::{normalization_squared, QuantumNumbers, RadialEigenfunction};
use crate::error::{Error, Result};
use crate::numeric::{self, Precision};
use crate::rational::{self, Rational};

/// Agreement required between the two rule sizes.
pub const CONVERGENCE_TOLERANCE: f64 = 1e-14;

fn radial(q: &QuantumNumbers, operation: &'static str) -> Result<u64> {
    q.n_integer()
        .filter(|_| q.d() >= 2)
        .ok_or(Error::UnsupportedDimension { d: q.d(), operation })
}

fn relative_gap(a: &Float, b: &Float) -> f64 {
    let diff = Float::with_val(a.prec(), a - b).abs().to_f64();
    let scale = a.to_f64().abs().max(b.to_f64().abs());
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// `sum_j w_j (A1 A2 / 2) x_j^s L_{n1}(x_j) L_{n2}(x_j)` at two rule sizes.
fn integrate_pair(q1: &QuantumNumbers, q2: &QuantumNumbers, s: u32, precision: Precision) -> Result<Float> {
    let bits = precision.bits();
    let (n1, n2) = (radial(q1, "quadrature")?, radial(q2, "quadrature")?);
    let alpha = q1.alpha();
    let a_prod = {
        let a1 = normalization_squared(q1)?.to_float(bits).sqrt();
        let a2 = normalization_squared(q2)?.to_float(bits).sqrt();
        Float::with_val(bits, &a1 * &a2) / 2u32
    };
    let alpha_f = numeric::float(bits, &alpha);
    let evaluate = |count: usize| -> Result<Float> {
        let rule = gauss_laguerre(&alpha, count, bits)?;
        let sum = rule.integrate(|x| {
            let p1 = numeric::laguerre(n1, &alpha_f, x);
            let p2 = numeric::laguerre(n2, &alpha_f, x);
            Float::with_val(bits, x.pow(s)) * p1 * p2
        });
        Ok(sum * &a_prod)
    };
    let base = (n1 + n2) as usize / 2 + s as usize;
    let coarse = evaluate(base + 2)?;
    let fine = evaluate(2 * base + 8)?;
    let gap = relative_gap(&coarse, &fine);
    let absolute = Float::with_val(bits, &coarse - &fine).abs().to_f64();
    if gap > CONVERGENCE_TOLERANCE && absolute > CONVERGENCE_TOLERANCE {
        return Err(Error::NonConvergence(format!(
            "quadrature rules disagree by {gap:e} for {q1} / {q2}, s={s}"
        )));
    }
    Ok(fine)
}

/// `<eta^s>` in the state `q`.
pub fn quad_expectation(q: &QuantumNumbers, s: u32, precision: Precision) -> Result<Float> {
    integrate_pair(q, q, s, precision)
}

/// `<u_{n1,l}| eta^s |u_{n2,l}>`.
pub fn quad_matrix_element(n1: u64, n2: u64, l: u32, d: u32, s: u32, precision: Precision) -> Result<Float> {
    let q1 = QuantumNumbers::new(d, n1, l)?;
    let q2 = QuantumNumbers::new(d, n2, l)?;
    integrate_pair(&q1, &q2, s, precision)
}

/// `max |<u_{n1}|u_{n2}> - delta_{n1 n2}|` over `n1, n2 <= n_max`.
pub fn orthonormality_check(l: u32, d: u32, n_max: u64, precision: Precision) -> Result<f64> {
    let mut worst = 0.0f64;
    for n1 in 0..=n_max {
        for n2 in n1..=n_max {
            let v = quad_matrix_element(n1, n2, l, d, 0, precision)?;
            let target = if n1 == n2 { 1 } else { 0 };
            worst = worst.max(Float::with_val(v.prec(), &v - target).abs().to_f64());
        }
    }
    Ok(worst)
}

/// `(1/128) sum_{n' <= cutoff, n' != n} <u_{n'}|eta^2|u_n>^2 / (n - n')`.
pub fn sum_over_states_check(q: &QuantumNumbers, cutoff: u64, precision: Precision) -> Result<Float> {
    let n = radial(q, "sum over states")?;
    if cutoff < n + 2 {
        return Err(Error::Domain(format!("cutoff {cutoff} must be at least n+2 = {}", n + 2)));
    }
    let bits = precision.bits();
    let mut sum = Float::with_val(bits, 0);
    for other in (0..=cutoff).filter(|&k| k != n) {
        let me = quad_matrix_element(other, n, q.l(), q.d(), 2, precision)?;
        let gap = n as i64 - other as i64;
        sum += Float::with_val(bits, me.square_ref()) / gap;
    }
    Ok(sum / 128u32)
}

/// Maximum relative residual of
/// `u'' = [(r^2 - 2E) + (d - 3 + l(l+d-2)) / r^2] u - ((d-3)/r) u'`
/// at the sample points, with `E = eps0`.
pub fn radial_residual(q: &QuantumNumbers, sample_etas: &[f64], precision: Precision) -> Result<f64> {
    radial_residual_with_energy(q, sample_etas, &crate::basis::energy_unperturbed(q), precision)
}

/// As [`radial_residual`] with an arbitrary trial energy.
pub fn radial_residual_with_energy(
    q: &QuantumNumbers,
    sample_etas: &[f64],
    energy: &Rational,
    precision: Precision,
) -> Result<f64> {
    radial(q, "radial residual")?;
    let bits = precision.bits();
    let u = RadialEigenfunction::new(*q)?;
    let d = i64::from(q.d());
    let l = i64::from(q.l());
    let centrifugal = Float::with_val(bits, d - 3 + l * (l + d - 2));
    let two_e = numeric::float(bits, &(energy * rational::int(2)));
    let mut worst = 0.0f64;
    for &eta in sample_etas {
        if !eta.is_finite() || eta <= 0.0 {
            return Err(Error::Domain(format!("sample points must be positive, got {eta}")));
        }
        let eta = Float::with_val(bits, eta);
        let r = Float::with_val(bits, eta.sqrt_ref());
        let der = u.derivatives_in_r(&eta);
        let potential = Float::with_val(bits, &eta - &two_e) * &der.value;
        let barrier = Float::with_val(bits, &centrifugal / &eta) * &der.value;
        let drift = Float::with_val(bits, (d - 3) as f64) / &r * &der.first;
        let residual = Float::with_val(bits, &der.second - &potential) - &barrier + &drift;
        let scale = [&der.second, &potential, &barrier, &drift]
            .iter()
            .map(|t| t.to_f64().abs())
            .fold(0.0f64, f64::max);
        let rel = if scale == 0.0 { 0.0 } else { residual.to_f64().abs() / scale };
        worst = worst.max(rel);
    }
    Ok(worst)
}

/// Relative difference between a quadrature value and an exact rational.
pub fn relative_error(value: &Float, exact: &Rational) -> f64 {
    let e = numeric::float(value.prec(), exact);
    relative_gap(value, &e)
}
