//! Method II: matrix elements of `eta`, `eta^2` and `eta^3` from the
//! Laguerre three-term structure
//!
//! ```text
//! eta u_n = D_n u_{n+1} + eps0(n) u_n + D_{n-1} u_{n-1},   D_n = -sqrt((n+1)(n+l+d/2))
//! ```
//!
//! and the first- and second-order corrections assembled from them. The
//! perturbations are used in their spectral form `H1' = -eta^2/8`,
//! `H2' = +eta^3/16` (reduced units), which is equivalent to the momentum form
//! for the oscillator. Off-diagonal elements are kept as [`Amplitude`]s so the
//! whole pipeline stays exact; only `D^2` ever enters a result.

use num::Zero;

use crate::amplitude::Amplitude;
use crate::basis::{energy_at, energy_unperturbed, QuantumNumbers};
use crate::rational::{rat, Rational};

fn c(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `D_k^2 = (k+1)(k+l+d/2)` for radial number `k = twice_k/2`; zero below range.
fn d_squared_at(q: &QuantumNumbers, twice_k: i64) -> Rational {
    if twice_k < 0 {
        return Rational::zero();
    }
    let k = rat(twice_k, 2);
    let shift = rat(2 * i64::from(q.l()) + i64::from(q.d()), 2);
    (&k + c(1)) * (k + shift)
}

/// `D_{n,l}^2 = (n+1)(n+l+d/2)`.
pub fn coeff_d_squared(q: &QuantumNumbers) -> Rational {
    d_squared_at(q, q.twice_n() as i64)
}

/// `eta u_n` in the basis `u_{n+1}, u_n, u_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridiagonalAction {
    pub q: QuantumNumbers,
    pub up: Amplitude,
    pub diag: Rational,
    pub down: Amplitude,
}

/// `eta^2 u_n` in the basis `u_{n+2}, ..., u_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PentadiagonalAction {
    pub q: QuantumNumbers,
    pub up2: Amplitude,
    pub up1: Amplitude,
    pub diag: Rational,
    pub down1: Amplitude,
    pub down2: Amplitude,
}

impl PentadiagonalAction {
    /// Off-diagonal entries as `(n' - n, element)`.
    pub fn off_diagonal(&self) -> [(i64, &Amplitude); 4] {
        [(2, &self.up2), (1, &self.up1), (-1, &self.down1), (-2, &self.down2)]
    }
}

pub fn eta_action(q: &QuantumNumbers) -> TridiagonalAction {
    let t = q.twice_n() as i64;
    TridiagonalAction {
        q: *q,
        up: Amplitude::neg_sqrt(d_squared_at(q, t)),
        diag: energy_unperturbed(q),
        down: Amplitude::neg_sqrt(d_squared_at(q, t - 2)),
    }
}

pub fn eta2_action(q: &QuantumNumbers) -> PentadiagonalAction {
    let t = q.twice_n() as i64;
    let e = |k: i64| energy_at(q, k);
    let dn = Amplitude::neg_sqrt(d_squared_at(q, t));
    let dn1 = Amplitude::neg_sqrt(d_squared_at(q, t + 2));
    let dm1 = Amplitude::neg_sqrt(d_squared_at(q, t - 2));
    let dm2 = Amplitude::neg_sqrt(d_squared_at(q, t - 4));
    let diag = dn.square() + e(t) * e(t) + dm1.square();
    PentadiagonalAction {
        q: *q,
        up2: &dn * &dn1,
        up1: dn.scaled(&(e(t) + e(t + 2))),
        diag,
        down1: dm1.scaled(&(e(t - 2) + e(t))),
        down2: &dm1 * &dm2,
    }
}

/// `<u_{n'} | eta | u_n>`; zero unless `|n' - n| <= 1`.
pub fn eta_matrix_element(q: &QuantumNumbers, delta: i64) -> Amplitude {
    let a = eta_action(q);
    match delta {
        1 => a.up,
        0 => Amplitude::from_rational(&a.diag),
        -1 => a.down,
        _ => Amplitude::zero(),
    }
}

/// `<u_{n'} | eta^2 | u_n>`; zero unless `|n' - n| <= 2`.
pub fn eta2_matrix_element(q: &QuantumNumbers, delta: i64) -> Amplitude {
    let a = eta2_action(q);
    match delta {
        2 => a.up2,
        1 => a.up1,
        0 => Amplitude::from_rational(&a.diag),
        -1 => a.down1,
        -2 => a.down2,
        _ => Amplitude::zero(),
    }
}

/// `<eta^2> = D_n^2 + eps0^2 + D_{n-1}^2`.
pub fn eta2_expectation(q: &QuantumNumbers) -> Rational {
    eta2_action(q).diag
}

pub fn first_order_method2(q: &QuantumNumbers) -> Rational {
    -eta2_expectation(q) / c(8)
}

/// `<eta^3>` from the eta and eta^2 actions.
pub fn eta3_expectation(q: &QuantumNumbers) -> Rational {
    let t = q.twice_n() as i64;
    let e = |k: i64| energy_at(q, k);
    let dn2 = d_squared_at(q, t);
    let dm2 = d_squared_at(q, t - 2);
    let e0 = e(t);
    &dn2 * (&e0 + e(t + 2)) + &e0 * (&dn2 + &e0 * &e0 + &dm2) + &dm2 * (e(t - 2) + &e0)
}

/// `<eta^3>/16`.
pub fn second_order_part1(q: &QuantumNumbers) -> Rational {
    eta3_expectation(q) / c(16)
}

/// `(1/128) sum_{n'} |<u_{n'}|eta^2|u_n>|^2 / (n - n')` over the four
/// non-vanishing neighbours.
pub fn second_order_part2(q: &QuantumNumbers) -> Rational {
    let action = eta2_action(q);
    let sum = action
        .off_diagonal()
        .into_iter()
        .filter(|(_, amp)| !amp.is_zero())
        .fold(Rational::zero(), |acc, (delta, amp)| acc + amp.square() / c(-delta));
    sum / c(128)
}

pub fn second_order_method2(q: &QuantumNumbers) -> Rational {
    second_order_part1(q) + second_order_part2(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{epsilon1_general, epsilon2_general};
    use crate::kramers::{first_order_method1, moment_r_even};
    use crate::rational::int;
    use num::Signed;

    fn q(d: u32, n: u64, l: u32) -> QuantumNumbers {
        QuantumNumbers::new(d, n, l).unwrap()
    }

    #[test]
    fn d_squared_examples() {
        assert_eq!(coeff_d_squared(&q(2, 0, 0)), int(1));
        assert_eq!(coeff_d_squared(&q(3, 0, 0)), rat(3, 2));
        assert_eq!(coeff_d_squared(&q(3, 1, 1)), int(7));
    }

    #[test]
    fn eta_action_examples() {
        let a = eta_action(&q(3, 0, 0));
        assert_eq!(a.up, Amplitude::neg_sqrt(rat(3, 2)));
        assert_eq!(a.diag, rat(3, 2));
        assert!(a.down.is_zero());
        assert_eq!(eta_action(&q(2, 1, 0)).diag, int(3));
        for d in 2..6 {
            for n in 0..5 {
                let s = q(d, n, 2);
                assert_eq!(eta_action(&s).diag, energy_unperturbed(&s));
            }
        }
    }

    #[test]
    fn eta2_examples() {
        assert_eq!(eta2_expectation(&q(3, 0, 0)), rat(15, 4));
        assert_eq!(eta2_expectation(&q(2, 0, 0)), int(2));
        assert_eq!(eta2_expectation(&QuantumNumbers::one_dimensional(0)), rat(3, 4));
        assert_eq!(eta2_expectation(&q(2, 0, 0)), moment_r_even(&q(2, 0, 0), 2).unwrap().value);
        // frozen from quadrature
        assert_eq!(eta2_expectation(&q(5, 2, 1)), rat(327, 4));
    }

    #[test]
    fn first_order_identities() {
        for s in [q(3, 0, 0), q(2, 0, 0), q(5, 1, 2)] {
            assert_eq!(first_order_method2(&s), epsilon1_general(&s));
            assert_eq!(first_order_method2(&s), first_order_method1(&s));
        }
    }

    #[test]
    fn eta3_examples() {
        // both frozen from quadrature
        assert_eq!(eta3_expectation(&q(3, 0, 0)), rat(105, 8));
        assert_eq!(eta3_expectation(&q(2, 0, 0)), int(6));
        assert_eq!(eta3_expectation(&q(5, 2, 1)), rat(8085, 8));
    }

    #[test]
    fn parts_of_second_order() {
        assert_eq!(second_order_part1(&q(3, 0, 0)), rat(105, 128));
        assert_eq!(second_order_part1(&q(2, 0, 0)), rat(3, 8));
        assert_eq!(second_order_part2(&q(3, 0, 0)), rat(-165, 512));
        assert_eq!(second_order_part2(&q(2, 0, 0)), rat(-9, 64));
        assert_eq!(second_order_part2(&q(5, 2, 1)), rat(-13785, 512));
        let d1 = QuantumNumbers::one_dimensional(0);
        assert_eq!(second_order_part1(&d1) + second_order_part2(&d1), rat(39, 512));
    }

    #[test]
    fn ground_state_part2_has_two_terms() {
        let a = eta2_action(&q(4, 0, 3));
        assert!(a.down1.is_zero() && a.down2.is_zero());
        assert!(!a.up1.is_zero() && !a.up2.is_zero());
        let a = eta2_action(&q(4, 1, 3));
        assert!(!a.down1.is_zero() && a.down2.is_zero());
    }

    #[test]
    fn second_order_identities() {
        for s in [q(3, 0, 0), q(2, 1, 1), q(7, 2, 3)] {
            assert_eq!(second_order_method2(&s), epsilon2_general(&s));
        }
    }

    #[test]
    fn hermiticity() {
        for d in 2..6 {
            for n in 0..6 {
                for l in 0..4 {
                    let s = q(d, n, l);
                    let next = s.shifted(1).unwrap();
                    assert_eq!(eta_action(&s).up, eta_action(&next).down);
                    assert_eq!(eta2_action(&s).up1, eta2_action(&next).down1);
                    let next2 = s.shifted(2).unwrap();
                    assert_eq!(eta2_action(&s).up2, eta2_action(&next2).down2);
                }
            }
        }
    }

    #[test]
    fn variance_non_negative() {
        for d in 1..8 {
            for n in 0..6 {
                for l in 0..6 {
                    let Ok(s) = QuantumNumbers::new(d, n, l) else { continue };
                    let e = energy_unperturbed(&s);
                    assert!(!(eta2_expectation(&s) - &e * &e).is_negative());
                }
            }
        }
    }

    #[test]
    fn sparsity_beyond_two() {
        let s = q(3, 4, 1);
        for delta in [3, 4, -3, -4, 7] {
            assert!(eta2_matrix_element(&s, delta).is_zero());
        }
        assert!(eta_matrix_element(&s, 2).is_zero());
        assert_eq!(eta_matrix_element(&s, 0), Amplitude::from_rational(&energy_unperturbed(&s)));
    }
}
