//! Momentum operators in units of `hbar m omega` (so `p^2` here is `p^2 / (hbar m omega)`).

use std::sync::OnceLock;

use super::algebra::Generator::{self, A, ADag, B, BDag};
use super::algebra::LadderExpr;
use crate::rational::rat;

fn w(coefficient: i64, word: &[Generator]) -> LadderExpr {
    LadderExpr::word(coefficient, word)
}

/// `p^2 = p_x^2 + p_y^2` with `p_x = (i/2)(a+ + b+ - a - b)` and
/// `p_y = -(1/2)(a+ - b+ + a - b)`, multiplied out without reordering.
pub fn p2_from_cartesian() -> LadderExpr {
    let x = w(1, &[ADag]) + w(1, &[BDag]) - w(1, &[A]) - w(1, &[B]);
    let y = w(1, &[ADag]) - w(1, &[BDag]) + w(1, &[A]) - w(1, &[B]);
    ((&y * &y) - (&x * &x)).scale(&rat(1, 4))
}

/// `a+ a + b+ b - a+ b+ - a b + 1`.
pub fn p2() -> LadderExpr {
    w(1, &[ADag, A]) + w(1, &[BDag, B]) - w(1, &[ADag, BDag]) - w(1, &[A, B]) + w(1, &[])
}

/// The five pieces of `p^4`, grouped by how far they move `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P4Operators {
    pub k0: LadderExpr,
    pub r4: LadderExpr,
    pub l4: LadderExpr,
    pub r2: LadderExpr,
    pub l2: LadderExpr,
}

impl P4Operators {
    pub fn total(&self) -> LadderExpr {
        self.k0.clone() + self.off_diagonal()
    }

    /// `R4 + L4 + R2 + L2`, everything that changes `N`.
    pub fn off_diagonal(&self) -> LadderExpr {
        self.r4.clone() + self.l4.clone() + self.r2.clone() + self.l2.clone()
    }

    pub fn named(&self) -> [(&'static str, &LadderExpr); 5] {
        [("K0", &self.k0), ("R4", &self.r4), ("L4", &self.l4), ("R2", &self.r2), ("L2", &self.l2)]
    }
}

fn build_p4() -> P4Operators {
    P4Operators {
        k0: w(1, &[ADag, A, ADag, A])
            + w(1, &[BDag, B, BDag, B])
            + w(4, &[ADag, A, BDag, B])
            + w(3, &[ADag, A])
            + w(3, &[BDag, B])
            + w(2, &[]),
        r4: w(1, &[ADag, BDag, ADag, BDag]),
        l4: w(1, &[A, B, A, B]),
        r2: w(-2, &[ADag, A, ADag, BDag]) + w(-2, &[BDag, B, ADag, BDag]),
        l2: w(-2, &[ADag, A, A, B]) + w(-2, &[BDag, B, A, B]) + w(-4, &[A, B]),
    }
}

pub fn p4_operators() -> &'static P4Operators {
    static P4: OnceLock<P4Operators> = OnceLock::new();
    P4.get_or_init(build_p4)
}

/// The `N`-conserving part of `p^6`: `(a+ a + b+ b + 1) K0 - a+ b+ L2 - a b R2`.
pub fn p6_zero() -> &'static LadderExpr {
    static P6: OnceLock<LadderExpr> = OnceLock::new();
    P6.get_or_init(|| {
        let ops = p4_operators();
        let diag = w(1, &[ADag, A]) + w(1, &[BDag, B]) + w(1, &[]);
        &diag * &ops.k0 - &w(1, &[ADag, BDag]) * &ops.l2 - &w(1, &[A, B]) * &ops.r2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_matches_cartesian_form() {
        assert_eq!(p2_from_cartesian().normal_order(), p2().normal_order());
    }

    #[test]
    fn p4_matches_square_of_p2() {
        let p = p2();
        assert_eq!((&p * &p).normal_order(), p4_operators().total().normal_order());
    }

    #[test]
    fn p6_zero_is_level_conserving_part_of_p6() {
        let p6 = &p2() * &p4_operators().total();
        assert_eq!(p6.normal_order().level_conserving(), p6_zero().normal_order());
    }

    #[test]
    fn pieces_shift_level_as_named() {
        let ops = p4_operators();
        let expect = [("K0", 0), ("R4", 4), ("L4", -4), ("R2", 2), ("L2", -2)];
        for ((name, expr), (ename, shift)) in ops.named().into_iter().zip(expect) {
            assert_eq!(name, ename);
            for mono in &expr.terms {
                assert_eq!(mono.delta_level(), shift, "{name}");
                assert_eq!(mono.delta_level(), mono.raising_count() as i64 - mono.lowering_count() as i64);
                assert_eq!(mono.delta_m(), 0, "{name}");
            }
        }
    }
}
