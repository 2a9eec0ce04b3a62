//! Degeneracies, first-order level splitting and the level table.

mod diagram;
mod landau;

pub use diagram::{diagram_data, Diagram, DiagramLevel, SubLevel};
pub use landau::{landau_analogue, LandauAnalogue, HBAR_SI};

use num::{BigUint, One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::basis::QuantumNumbers;
use crate::error::{Error, Result};
use crate::formulas::correction_triple;
use crate::rational::{self, Rational};
use crate::report::serialize_pq;

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `g(N, d) = C(N+d-1, d-1)`.
pub fn degeneracy_total(level: u64, d: u32) -> BigUint {
    assert!(d >= 1, "dimension must be at least 1");
    binomial(level + u64::from(d) - 1, u64::from(d) - 1)
}

/// `h(l, d) = (2l+d-2)(l+d-3)! / ((d-2)! l!)`, with `h(0, 2) = h(l, 1) = 1`.
pub fn degeneracy_level(l: u32, d: u32) -> BigUint {
    assert!(d >= 1, "dimension must be at least 1");
    if d == 1 || (d == 2 && l == 0) {
        return BigUint::one();
    }
    let (l, d) = (u64::from(l), u64::from(d));
    BigUint::from(2 * l + d - 2) * factorial(l + d - 3) / (factorial(d - 2) * factorial(l))
}

/// Number of distinct first-order sub-levels of level `N`: `floor(N/2) + 1`.
pub fn split_count(level: u64) -> u64 {
    level / 2 + 1
}

/// Angular momenta present at level `N`, ascending: `N mod 2, ..., N-2, N`.
pub fn allowed_l(level: u64) -> Vec<u32> {
    ((level % 2)..=level).step_by(2).map(|l| l as u32).collect()
}

fn serialize_count<S: Serializer>(value: &BigUint, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(value) {
        Ok(v) => serializer.serialize_u64(v),
        Err(_) => serializer.serialize_str(&value.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    #[serde(rename = "N")]
    pub level: u64,
    pub l: u32,
    #[serde(serialize_with = "serialize_pq")]
    pub eps0: Rational,
    #[serde(serialize_with = "serialize_pq")]
    pub eps1: Rational,
    #[serde(serialize_with = "serialize_pq")]
    pub eps2: Rational,
    /// `eps0 + lambda eps1 + lambda^2 eps2`.
    #[serde(serialize_with = "serialize_pq")]
    pub energy: Rational,
    #[serde(serialize_with = "serialize_count")]
    pub degeneracy: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelTable {
    pub d: u32,
    #[serde(serialize_with = "serialize_pq")]
    pub lambda: Rational,
    pub rows: Vec<LevelRow>,
}

pub const CSV_HEADER: &str = "N,l,eps0,eps1,eps2,energy,degeneracy";

impl LevelTable {
    pub fn n_max(&self) -> u64 {
        self.rows.last().map_or(0, |r| r.level)
    }

    pub fn rows_at(&self, level: u64) -> impl Iterator<Item = &LevelRow> {
        self.rows.iter().filter(move |r| r.level == level)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.level,
                r.l,
                rational::to_pq(&r.eps0),
                rational::to_pq(&r.eps1),
                rational::to_pq(&r.eps2),
                rational::to_pq(&r.energy),
                r.degeneracy
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    /// Violations of the sum rule, the split count and the first-order ordering.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for level in 0..=self.n_max() {
            let rows: Vec<&LevelRow> = self.rows_at(level).collect();
            let total: BigUint = rows.iter().map(|r| r.degeneracy.clone()).sum();
            if total != degeneracy_total(level, self.d) {
                out.push(format!("N={level}: sum of h(l,d) is {total}, expected {}", degeneracy_total(level, self.d)));
            }
            if self.d >= 2 && rows.len() as u64 != split_count(level) {
                out.push(format!("N={level}: {} sub-levels, expected {}", rows.len(), split_count(level)));
            }
            for r in &rows {
                if !r.eps1.is_negative() {
                    out.push(format!("N={level}, l={}: eps1 is not negative", r.l));
                }
            }
            for pair in rows.windows(2) {
                if pair[1].eps1 <= pair[0].eps1 {
                    out.push(format!("N={level}: eps1 not strictly increasing at l={}", pair[1].l));
                }
            }
        }
        out
    }
}

fn row_for(q: QuantumNumbers, lambda: &Rational) -> LevelRow {
    let t = correction_triple(&q);
    LevelRow {
        level: q.level(),
        l: q.l(),
        energy: t.shifted_energy(lambda),
        degeneracy: degeneracy_level(q.l(), q.d()),
        eps0: t.epsilon0,
        eps1: t.epsilon1,
        eps2: t.epsilon2,
    }
}

/// One row per `(N, l)` with `N <= n_max`, ordered by `N` then `l`.
pub fn level_table(n_max: u64, d: u32, lambda: &Rational) -> Result<LevelTable> {
    if !lambda.is_positive() {
        return Err(Error::Domain(format!("lambda must be positive, got {}", rational::to_pq(lambda))));
    }
    if d == 0 {
        return Err(Error::InvalidQuantumNumbers("dimension must be at least 1".into()));
    }
    let per_level: Vec<Vec<LevelRow>> = (0..=n_max)
        .into_par_iter()
        .map(|level| {
            if d == 1 {
                vec![row_for(QuantumNumbers::one_dimensional(level), lambda)]
            } else {
                allowed_l(level)
                    .into_iter()
                    .map(|l| row_for(QuantumNumbers::from_level(d, level, l).expect("allowed l"), lambda))
                    .collect()
            }
        })
        .collect();
    Ok(LevelTable { d, lambda: lambda.clone(), rows: per_level.into_iter().flatten().collect() })
}
