//! A charged particle in a uniform magnetic field `B0` plus a linear
//! electric field `E = -k r` behaves as a 2D oscillator; tuning `B0` makes
//! the cyclotron and electric frequencies coincide.

use crate::error::{Error, Result};

/// Reduced Planck constant in J s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;

#[derive(Clone, Debug, PartialEq)]
pub struct LandauAnalogue {
    /// `sqrt(q k / m)`.
    pub omega_1: f64,
    /// `|q| B0 / m` at the matched field.
    pub omega_c: f64,
    /// `sqrt(m k / q)`.
    pub b0_match: f64,
    /// `E(N) = (N+1) hbar omega` for `N = 0..=n_max`, in joules.
    pub energies: Vec<f64>,
    /// `N + 1`.
    pub degeneracies: Vec<u64>,
}

/// SI inputs: charge in C, field constant in V/m^2, mass in kg.
pub fn landau_analogue(charge: f64, field_k: f64, mass: f64, n_max: u64) -> Result<LandauAnalogue> {
    if (charge * field_k).is_nan() || charge * field_k <= 0.0 {
        return Err(Error::Domain(format!("q k must be positive, got q={charge}, k={field_k}")));
    }
    if !mass.is_finite() || mass <= 0.0 {
        return Err(Error::Domain(format!("mass must be positive, got {mass}")));
    }
    let omega_1 = (charge * field_k / mass).sqrt();
    let b0_match = (mass * field_k / charge).sqrt();
    let omega_c = charge.abs() * b0_match / mass;
    let energies = (0..=n_max).map(|n| (n + 1) as f64 * HBAR_SI * omega_1).collect();
    let degeneracies = (0..=n_max).map(|n| n + 1).collect();
    Ok(LandauAnalogue { omega_1, omega_c, b0_match, energies, degeneracies })
}
