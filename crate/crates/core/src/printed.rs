//! Dimension-specific and partial forms of the corrections, transcribed term
//! by term as independent polynomials.
//!
//! These are not used to compute anything; they exist so that the general
//! formulas and the three methods can be checked against separately written
//! expressions for d = 1, 2, 3 and against the two parts of the second-order
//! correction.

use crate::rational::{rat, Rational};

fn c(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// d = 3: `-(1/8)[6n^2 + l^2 + 6nl + 9n + 4l + 15/4]`.
pub fn epsilon1_d3(n: &Rational, l: &Rational) -> Rational {
    -(c(6) * n * n + l * l + c(6) * n * l + c(9) * n + c(4) * l + rat(15, 4)) / c(8)
}

/// d = 1 at level `N`: `-(1/32)[6N^2 + 6N + 3]`.
pub fn epsilon1_d1(level: &Rational) -> Rational {
    -(c(6) * level * level + c(6) * level + c(3)) / c(32)
}

/// d = 2: `-(1/8)[6n^2 + l^2 + 6nl + 6n + 3l + 2]`.
pub fn epsilon1_d2(n: &Rational, l: &Rational) -> Rational {
    -(c(6) * n * n + l * l + c(6) * n * l + c(6) * n + c(3) * l + c(2)) / c(8)
}

/// Method-II bracket: `-(1/8)[6n^2 + l^2 + 6nl + 3nd + (1+d)l + (d/4)(2+d)]`.
pub fn epsilon1_laguerre_form(n: &Rational, l: &Rational, d: &Rational) -> Rational {
    -(c(6) * n * n + l * l + c(6) * n * l + c(3) * n * d + (c(1) + d) * l + d / c(4) * (c(2) + d)) / c(8)
}

/// d = 1 at level `N`: `(1/512)(46N^3 + 69N^2 + 101N + 39)`.
pub fn epsilon2_d1(level: &Rational) -> Rational {
    let n = level;
    (c(46) * n * n * n + c(69) * n * n + c(101) * n + c(39)) / c(512)
}

/// d = 3 second-order bracket over 256.
pub fn epsilon2_d3(n: &Rational, l: &Rational) -> Rational {
    (c(184) * n * n * n + c(414) * n * n + c(377) * n + c(8) * l * l * l + c(66) * l * l + c(166) * l
        + c(276) * n * n * l
        + c(108) * n * l * l
        + c(330) * n * l
        + rat(255, 2))
        / c(256)
}

/// d = 2 second-order bracket over 256.
pub fn epsilon2_d2(n: &Rational, l: &Rational) -> Rational {
    (c(184) * n * n * n + c(276) * n * n + c(212) * n + c(8) * l * l * l + c(54) * l * l + c(106) * l
        + c(276) * n * n * l
        + c(108) * n * l * l
        + c(276) * n * l
        + c(60))
        / c(256)
}

/// Expectation-value part of the second-order correction, `<eta^3>/16`.
pub fn second_order_part1(n: &Rational, l: &Rational, d: &Rational) -> Rational {
    let bracket = c(20) * n * n * n
        + c(15) * n * n * d
        + (c(4) + c(3) * d + c(3) * d * d) * n
        + l * l * l
        + rat(3, 2) * (d + c(2)) * l * l
        + (c(2) + c(3) * d + rat(3, 4) * d * d) * l
        + c(30) * n * n * l
        + c(12) * n * l * l
        + c(6) * (c(1) + c(2) * d) * n * l
        + d / c(8) * (c(8) + c(6) * d + d * d);
    bracket / c(16)
}

/// Sum-over-states part of the second-order correction.
pub fn second_order_part2(n: &Rational, l: &Rational, d: &Rational) -> Rational {
    let bracket = c(136) * n * n * n
        + c(102) * n * n * d
        + (c(21) * d * d + c(18) * d + c(20)) * n
        + c(8) * l * l * l
        + (c(12) * d + c(18)) * l * l
        + (c(6) * d * d + c(18) * d + c(10)) * l
        + c(204) * n * n * l
        + c(84) * n * l * l
        + (c(84) * d + c(36)) * n * l
        + rat(1, 2) * (c(2) * d * d + c(9) * d + c(10)) * d;
    -bracket / c(256)
}

/// Two-dimensional forms in the polar labels `(N, m)`.
pub mod polar {
    use super::c;
    use crate::rational::Rational;

    /// `-(1/16)(3N^2 + 6N - m^2 + 4)`.
    pub fn epsilon1(level: &Rational, m: &Rational) -> Rational {
        let n = level;
        -(c(3) * n * n + c(6) * n - m * m + c(4)) / c(16)
    }

    /// `(1/32)(5N^3 + 15N^2 - 3m^2 - 3Nm^2 + 22N + 12)`.
    pub fn second_order_part1(level: &Rational, m: &Rational) -> Rational {
        let n = level;
        (c(5) * n * n * n + c(15) * n * n - c(3) * m * m - c(3) * n * m * m + c(22) * n + c(12)) / c(32)
    }

    /// `(1/256)(-17N^3 - 51N^2 + 9Nm^2 - 70N + 9m^2 - 36)`.
    pub fn second_order_part2(level: &Rational, m: &Rational) -> Rational {
        let n = level;
        (c(-17) * n * n * n - c(51) * n * n + c(9) * n * m * m - c(70) * n + c(9) * m * m - c(36)) / c(256)
    }

    /// `(1/256)(23N^3 + 69N^2 - 15Nm^2 + 106N - 15m^2 + 60)`.
    pub fn epsilon2(level: &Rational, m: &Rational) -> Rational {
        let n = level;
        (c(23) * n * n * n + c(69) * n * n - c(15) * n * m * m + c(106) * n - c(15) * m * m + c(60)) / c(256)
    }

    /// The polar second-order form rewritten with `N = 2n + l`, `m^2 = l^2`.
    pub fn epsilon2_radial(n: &Rational, l: &Rational) -> Rational {
        (c(184) * n * n * n + c(276) * n * n * l + c(108) * n * l * l + c(8) * l * l * l + c(276) * n * n
            + c(276) * n * l
            + c(54) * l * l
            + c(212) * n
            + c(106) * l
            + c(60))
            / c(256)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn ground_state_constants() {
        let z = int(0);
        assert_eq!(epsilon1_d3(&z, &z), rat(-15, 32));
        assert_eq!(epsilon1_d1(&z), rat(-3, 32));
        assert_eq!(epsilon2_d1(&z), rat(39, 512));
        assert_eq!(epsilon2_d3(&z, &z), rat(255, 512));
        assert_eq!(second_order_part1(&z, &z, &int(3)), rat(105, 128));
        assert_eq!(second_order_part2(&z, &z, &int(3)), rat(-165, 512));
        assert_eq!(polar::second_order_part1(&z, &z), rat(3, 8));
        assert_eq!(polar::second_order_part2(&z, &z), rat(-9, 64));
        assert_eq!(polar::epsilon2(&z, &z), rat(15, 64));
    }

    #[test]
    fn polar_parts_add_up() {
        for n in 0..20 {
            for m in -n..=n {
                let (nn, mm) = (int(n), int(m));
                assert_eq!(
                    polar::second_order_part1(&nn, &mm) + polar::second_order_part2(&nn, &mm),
                    polar::epsilon2(&nn, &mm)
                );
            }
        }
    }
}
