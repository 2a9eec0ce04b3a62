//! Method III: the two-dimensional oscillator in the circular ladder basis.
//!
//! `a` and `b` annihilate quanta with angular momentum `-1` and `+1`, so
//! `|N m>` carries `n_a = (N-m)/2` and `n_b = (N+m)/2` quanta. The momentum
//! powers are built from the ladder algebra and applied state by state; no
//! radial information enters.

pub mod algebra;
pub mod fock;
pub mod operators;

pub use algebra::{Generator, LadderExpr, Monomial, NormalOrdered};
pub use fock::{
    apply_generator, apply_monomial, build_state, expectation, matrix_element, matrix_element_squared,
    transitions, BuiltState, FockState2D, Transition,
};
pub use operators::{p2, p2_from_cartesian, p4_operators, p6_zero, P4Operators};

use num::Zero;

use crate::basis::QuantumNumbers;
use crate::error::Result;
use crate::rational::{int, Rational};

/// `-(1/8) <N m|K0|N m>`.
pub fn first_order_2d(s: FockState2D) -> Result<Rational> {
    Ok(-expectation(&p4_operators().k0, s)? / int(8))
}

/// `(1/16) <N m|p6_0|N m>`.
pub fn second_order_2d_part_i(s: FockState2D) -> Result<Rational> {
    Ok(expectation(p6_zero(), s)? / int(16))
}

/// `(1/64) sum_{N'} |<N' m|R2 + L2 + R4 + L4|N m>|^2 / (N - N')`.
pub fn second_order_2d_part_ii(s: FockState2D) -> Result<Rational> {
    let reached = transitions(&p4_operators().off_diagonal(), s)?;
    let mut sum = Rational::zero();
    for (target, amp) in reached {
        let gap = s.level() as i64 - target.level() as i64;
        sum += amp.square() / int(gap);
    }
    Ok(sum / int(64))
}

pub fn second_order_2d(s: FockState2D) -> Result<Rational> {
    Ok(second_order_2d_part_i(s)? + second_order_2d_part_ii(s)?)
}

/// `<N m|p^2|N m>`.
pub fn p2_expectation(s: FockState2D) -> Result<Rational> {
    expectation(&p2(), s)
}

/// `N = 2n + l`, `l = |m|`.
pub fn map_nm_to_nl(s: FockState2D) -> QuantumNumbers {
    let l = s.m().unsigned_abs();
    QuantumNumbers::new(2, (s.level() - l) / 2, l as u32).expect("parity guaranteed by FockState2D")
}
