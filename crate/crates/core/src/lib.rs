//! Exact relativistic corrections for the d-dimensional isotropic harmonic
//! oscillator under the spinless Salpeter Hamiltonian.
//!
//! Energies are reduced: `epsilon0` in units of `hbar omega`, and the
//! corrections multiply `lambda hbar omega` and `lambda^2 hbar omega` with
//! `lambda = hbar omega / (m c^2)`. Three independent routes compute them:
//!
//! * [`kramers`]: radial moments from the Kramers recursion,
//! * [`laguerre_me`]: matrix elements of `eta = r^2` in the Laguerre basis,
//! * [`ladder2d`]: circular ladder operators for `d = 2`,
//!
//! and [`oracle`] checks all of them against high-precision quadrature.

pub mod amplitude;
pub mod basis;
pub mod error;
pub mod formulas;
pub mod kramers;
pub mod ladder2d;
pub mod laguerre_me;
pub mod numeric;
pub mod oracle;
pub mod printed;
pub mod rational;
pub mod report;
pub mod spectrum;
pub mod verify;

pub use amplitude::Amplitude;
pub use basis::{energy_unperturbed, QuantumNumbers, RadialEigenfunction};
pub use error::{Error, Result};
pub use formulas::{correction_triple, epsilon1_general, epsilon2_general, CorrectionTriple};
pub use ladder2d::FockState2D;
pub use numeric::Precision;
pub use rational::Rational;
pub use report::{Report, ReportEntry, Status};
pub use spectrum::{level_table, LevelTable};
pub use verify::{GridSize, VerifyOptions};
