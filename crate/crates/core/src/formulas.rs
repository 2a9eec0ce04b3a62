//! Closed-form first- and second-order relativistic corrections.
//!
//! All values are reduced: `epsilon0` multiplies `hbar omega`, `epsilon1`
//! multiplies `lambda hbar omega` and `epsilon2` multiplies
//! `lambda^2 hbar omega`, where `lambda = hbar omega / (m c^2)`.

use serde::Serialize;

use crate::basis::{energy_unperturbed, QuantumNumbers};
use crate::rational::{from_u64, rat, Rational};

/// `(epsilon0, epsilon1, epsilon2)` for one state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectionTriple {
    #[serde(serialize_with = "crate::report::serialize_pq")]
    pub epsilon0: Rational,
    #[serde(serialize_with = "crate::report::serialize_pq")]
    pub epsilon1: Rational,
    #[serde(serialize_with = "crate::report::serialize_pq")]
    pub epsilon2: Rational,
}

impl CorrectionTriple {
    /// `epsilon0 + lambda epsilon1 + lambda^2 epsilon2`.
    pub fn shifted_energy(&self, lambda: &Rational) -> Rational {
        &self.epsilon0 + lambda * &self.epsilon1 + lambda * lambda * &self.epsilon2
    }
}

struct Vars {
    n: Rational,
    l: Rational,
    d: Rational,
}

fn vars(q: &QuantumNumbers) -> Vars {
    Vars { n: q.n(), l: from_u64(u64::from(q.l())), d: from_u64(u64::from(q.d())) }
}

fn c(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `-(1/8)[6n^2 + l^2 + 6nl + 3nd + ld + l + (d^2 + 2d)/4]`.
pub fn epsilon1_general(q: &QuantumNumbers) -> Rational {
    let Vars { n, l, d } = vars(q);
    let bracket = c(6) * &n * &n + &l * &l + c(6) * &n * &l + c(3) * &n * &d + &l * &d + &l
        + (&d * &d + c(2) * &d) / c(4);
    -bracket / c(8)
}

/// `-(1/8)[(3/2) eps0^2 - (1/2) l(l+d-2) + (4d - d^2)/8]`.
pub fn epsilon1_rewritten(q: &QuantumNumbers) -> Rational {
    let Vars { l, d, .. } = vars(q);
    let e = energy_unperturbed(q);
    let bracket = rat(3, 2) * &e * &e - rat(1, 2) * &l * (&l + &d - c(2)) + (c(4) * &d - &d * &d) / c(8);
    -bracket / c(8)
}

/// Full second-order correction.
pub fn epsilon2_general(q: &QuantumNumbers) -> Rational {
    let Vars { n, l, d } = vars(q);
    let n2 = &n * &n;
    let l2 = &l * &l;
    let d2 = &d * &d;
    let bracket = c(184) * &n2 * &n
        + c(138) * &n2 * &d
        + (c(27) * &d2 + c(30) * &d + c(44)) * &n
        + c(8) * &l2 * &l
        + (c(12) * &d + c(30)) * &l2
        + (c(6) * &d2 + c(30) * &d + c(22)) * &l
        + c(276) * &n2 * &l
        + c(108) * &n * &l2
        + (c(108) * &d + c(60)) * &n * &l
        + (&d2 + rat(15, 2) * &d + c(11)) * &d;
    bracket / c(256)
}

pub fn correction_triple(q: &QuantumNumbers) -> CorrectionTriple {
    CorrectionTriple {
        epsilon0: energy_unperturbed(q),
        epsilon1: epsilon1_general(q),
        epsilon2: epsilon2_general(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{Signed, Zero};

    fn q(d: u32, n: u64, l: u32) -> QuantumNumbers {
        QuantumNumbers::new(d, n, l).unwrap()
    }

    #[test]
    fn first_order_spot_values() {
        assert_eq!(epsilon1_general(&q(3, 0, 0)), rat(-15, 32));
        assert_eq!(epsilon1_general(&QuantumNumbers::one_dimensional(0)), rat(-3, 32));
        assert_eq!(epsilon1_general(&q(2, 0, 0)), rat(-1, 4));
    }

    #[test]
    fn rewritten_examples() {
        assert_eq!(epsilon1_rewritten(&q(3, 0, 0)), rat(-15, 32));
        assert_eq!(epsilon1_rewritten(&q(2, 1, 0)), rat(-14, 8));
        assert_eq!(epsilon1_rewritten(&q(4, 0, 1)), epsilon1_general(&q(4, 0, 1)));
    }

    #[test]
    fn second_order_spot_values() {
        assert_eq!(epsilon2_general(&q(3, 0, 0)), rat(255, 512));
        assert_eq!(epsilon2_general(&QuantumNumbers::one_dimensional(0)), rat(39, 512));
        assert_eq!(epsilon2_general(&q(2, 0, 0)), rat(15, 64));
    }

    #[test]
    fn triples() {
        let t = correction_triple(&q(3, 0, 0));
        assert_eq!(t, CorrectionTriple { epsilon0: rat(3, 2), epsilon1: rat(-15, 32), epsilon2: rat(255, 512) });
        let t = correction_triple(&q(2, 0, 0));
        assert_eq!(t, CorrectionTriple { epsilon0: rat(1, 1), epsilon1: rat(-1, 4), epsilon2: rat(15, 64) });
        let t = correction_triple(&QuantumNumbers::one_dimensional(1));
        assert_eq!(t, CorrectionTriple { epsilon0: rat(3, 2), epsilon1: rat(-15, 32), epsilon2: rat(255, 512) });
    }

    #[test]
    fn signs_and_monotonicity_in_d() {
        for n in 0..8 {
            for l in 0..8 {
                let mut prev: Option<Rational> = None;
                for d in 2..=10 {
                    let s = q(d, n, l);
                    let t = correction_triple(&s);
                    assert!(t.epsilon1.is_negative() && t.epsilon2.is_positive());
                    let mag = t.epsilon1.abs();
                    if let Some(p) = prev {
                        assert!(mag > p, "{s}");
                    }
                    prev = Some(mag);
                }
            }
        }
        assert!(!epsilon1_general(&QuantumNumbers::one_dimensional(5)).is_zero());
    }

    #[test]
    fn shifted_energy_combines_orders() {
        let t = correction_triple(&q(3, 0, 0));
        let lambda = rat(1, 100);
        assert_eq!(t.shifted_energy(&lambda), rat(3, 2) - rat(15, 3200) + rat(255, 5_120_000));
    }
}
