//! Grid verification: every method against every other, and against the oracle.

use std::fmt;
use std::str::FromStr;

use num::{FromPrimitive, Signed};
use rayon::prelude::*;
use rug::Float;

use crate::basis::QuantumNumbers;
use crate::error::{Error, Result};
use crate::formulas::{epsilon1_general, epsilon1_rewritten, epsilon2_general};
use crate::kramers::{first_order_method1, radial_moment};
use crate::ladder2d::{self, FockState2D};
use crate::laguerre_me::{first_order_method2, second_order_method2, second_order_part2};
use crate::numeric::Precision;
use crate::oracle;
use crate::rational::{self, Rational};
use crate::report::{Report, ReportEntry, Status, DECIMAL_DIGITS};

pub const MOMENT_TOLERANCE: f64 = 1e-12;
pub const SUM_OVER_STATES_TOLERANCE: f64 = 1e-10;
pub const ORTHONORMALITY_TOLERANCE: f64 = 1e-12;
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
pub const RESIDUAL_SAMPLES: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 5.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSize {
    Small,
    Default,
    Large,
}

impl FromStr for GridSize {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(GridSize::Small),
            "default" => Ok(GridSize::Default),
            "large" => Ok(GridSize::Large),
            _ => Err(Error::Parse { what: "grid", input: s.to_string() }),
        }
    }
}

impl fmt::Display for GridSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GridSize::Small => "small",
            GridSize::Default => "default",
            GridSize::Large => "large",
        })
    }
}

/// Ranges covered by one verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    /// Dimensions `1..=d_max` for the exact checks.
    pub d_max: u32,
    /// `n, l <= nl_max` (and `N <= 2 nl_max` for `d = 1`).
    pub nl_max: u64,
    pub ladder_level_max: u64,
    pub oracle_dims: Vec<u32>,
    pub oracle_nl_max: u64,
    /// Powers `eta^s`, `s <= oracle_s_max`.
    pub oracle_s_max: u32,
}

impl Grid {
    pub fn preset(size: GridSize) -> Self {
        match size {
            GridSize::Small => Grid {
                d_max: 4,
                nl_max: 6,
                ladder_level_max: 10,
                oracle_dims: vec![2, 3],
                oracle_nl_max: 3,
                oracle_s_max: 4,
            },
            GridSize::Default => Grid {
                d_max: 10,
                nl_max: 12,
                ladder_level_max: 20,
                oracle_dims: vec![2, 3, 5],
                oracle_nl_max: 4,
                oracle_s_max: 6,
            },
            GridSize::Large => Grid {
                d_max: 10,
                nl_max: 25,
                ladder_level_max: 40,
                oracle_dims: vec![2, 3, 5],
                oracle_nl_max: 8,
                oracle_s_max: 8,
            },
        }
    }

    /// All exact-check states: `d = 1` by level, `d >= 2` by `(n, l)`.
    pub fn states(&self) -> Vec<QuantumNumbers> {
        let mut out: Vec<QuantumNumbers> = (0..=2 * self.nl_max).map(QuantumNumbers::one_dimensional).collect();
        for d in 2..=self.d_max {
            for n in 0..=self.nl_max {
                for l in 0..=self.nl_max as u32 {
                    out.push(QuantumNumbers::new(d, n, l).expect("valid grid state"));
                }
            }
        }
        out
    }

    pub fn oracle_states(&self) -> Vec<QuantumNumbers> {
        let mut out = Vec::new();
        for &d in &self.oracle_dims {
            for n in 0..=self.oracle_nl_max {
                for l in 0..=self.oracle_nl_max as u32 {
                    out.push(QuantumNumbers::new(d, n, l).expect("valid grid state"));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub grid: Grid,
    /// Replace the closed-form `6 n^2` by `7 n^2` in the first-order bracket,
    /// which every cross-check must catch.
    pub perturb: bool,
    pub precision: Precision,
    pub include_oracle: bool,
}

impl VerifyOptions {
    pub fn new(size: GridSize) -> Self {
        VerifyOptions { grid: Grid::preset(size), perturb: false, precision: Precision::default(), include_oracle: true }
    }
}

fn reference_epsilon1(q: &QuantumNumbers, perturb: bool) -> Rational {
    let value = epsilon1_general(q);
    if perturb {
        let n = q.n();
        value - &n * &n / rational::int(8)
    } else {
        value
    }
}

fn case_label(q: &QuantumNumbers) -> String {
    if q.d() == 1 {
        format!("d=1 N={}", q.level())
    } else {
        format!("d={} n={} l={}", q.d(), q.twice_n() / 2, q.l())
    }
}

fn agree(ok: bool) -> Status {
    if ok {
        Status::Agree
    } else {
        Status::Disagree
    }
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Exact cross-method entries for one state.
pub fn exact_entries(q: &QuantumNumbers, perturb: bool) -> Vec<ReportEntry> {
    let case = case_label(q);
    let e1 = reference_epsilon1(q, perturb);
    let e2 = epsilon2_general(q);
    let first_ok = first_order_method1(q) == e1 && first_order_method2(q) == e1 && epsilon1_rewritten(q) == e1;
    let second_ok = second_order_method2(q) == e2;
    vec![
        ReportEntry::exact(case.clone(), "first-order: closed form = kramers = laguerre", &e1, agree(first_ok)),
        ReportEntry::exact(case.clone(), "second-order: closed form = laguerre parts I+II", &e2, agree(second_ok)),
        ReportEntry::exact(case, "signs: eps1 < 0 < eps2", &e1, pass(e1.is_negative() && e2.is_positive())),
    ]
}

/// Ladder-operator entries for one two-dimensional state.
pub fn ladder_entries(s: FockState2D, perturb: bool) -> Vec<ReportEntry> {
    let case = format!("d=2 N={} m={}", s.level(), s.m());
    let q = ladder2d::map_nm_to_nl(s);
    let e1 = reference_epsilon1(&q, perturb);
    let e2 = epsilon2_general(&q);
    let first = ladder2d::first_order_2d(s);
    let second = ladder2d::second_order_2d(s);
    vec![
        ReportEntry::exact(case.clone(), "first-order: ladder = closed form", &e1, agree(first.ok() == Some(e1.clone()))),
        ReportEntry::exact(case, "second-order: ladder = closed form", &e2, agree(second.ok() == Some(e2.clone()))),
    ]
}

fn float_decimal(value: &Float) -> String {
    match Rational::from_f64(value.to_f64()) {
        Some(r) => rational::to_decimal(&r, DECIMAL_DIGITS),
        None => value.to_f64().to_string(),
    }
}

fn oracle_failure(case: String, method: &str, err: Error) -> ReportEntry {
    ReportEntry { case, method: method.to_string(), value_pq: None, value_dec: Some(err.to_string()), status: Status::Fail }
}

fn oracle_compare(case: &str, method: &str, value: Result<Float>, exact: &Rational, tolerance: f64) -> ReportEntry {
    match value {
        Ok(v) => {
            let ok = oracle::relative_error(&v, exact) <= tolerance;
            ReportEntry {
                case: case.to_string(),
                method: method.to_string(),
                value_pq: Some(rational::to_pq(exact)),
                value_dec: Some(float_decimal(&v)),
                status: pass(ok),
            }
        }
        Err(e) => oracle_failure(case.to_string(), method, e),
    }
}

/// Quadrature entries for one state: moments, the sum over states and the residual.
pub fn oracle_entries(q: &QuantumNumbers, s_max: u32, precision: Precision) -> Vec<ReportEntry> {
    let case = case_label(q);
    let mut out = Vec::new();
    for s in 0..=s_max {
        let exact = radial_moment(q, 2 * s).expect("even power").value;
        let v = oracle::quad_expectation(q, s, precision);
        out.push(oracle_compare(&case, &format!("oracle: <eta^{s}> = kramers"), v, &exact, MOMENT_TOLERANCE));
    }
    let n = q.twice_n() / 2;
    let part2 = second_order_part2(q);
    let v = oracle::sum_over_states_check(q, n + 4, precision);
    out.push(oracle_compare(&case, "oracle: sum over states = laguerre part II", v, &part2, SUM_OVER_STATES_TOLERANCE));
    out.push(match oracle::radial_residual(q, &RESIDUAL_SAMPLES, precision) {
        Ok(r) => ReportEntry::approximate(case.clone(), "oracle: radial residual", format!("{r:.3e}"), pass(r <= RESIDUAL_TOLERANCE)),
        Err(e) => oracle_failure(case.clone(), "oracle: radial residual", e),
    });
    out
}

pub fn orthonormality_entries(grid: &Grid, precision: Precision) -> Vec<ReportEntry> {
    let pairs: Vec<(u32, u32)> = grid
        .oracle_dims
        .iter()
        .flat_map(|&d| (0..=grid.oracle_nl_max as u32).map(move |l| (d, l)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(d, l)| {
            let case = format!("d={d} l={l} n<={}", grid.oracle_nl_max);
            match oracle::orthonormality_check(l, d, grid.oracle_nl_max, precision) {
                Ok(dev) => ReportEntry::approximate(
                    case,
                    "oracle: orthonormality",
                    format!("{dev:.3e}"),
                    pass(dev <= ORTHONORMALITY_TOLERANCE),
                ),
                Err(e) => oracle_failure(case, "oracle: orthonormality", e),
            }
        })
        .collect()
}

pub fn run(options: &VerifyOptions) -> Report {
    let grid = &options.grid;
    let mut entries: Vec<ReportEntry> =
        grid.states().par_iter().flat_map_iter(|q| exact_entries(q, options.perturb)).collect();

    let ladder_states: Vec<FockState2D> =
        (0..=grid.ladder_level_max).flat_map(FockState2D::all_at_level).collect();
    entries.extend(
        ladder_states.par_iter().flat_map_iter(|&s| ladder_entries(s, options.perturb)).collect::<Vec<_>>(),
    );

    if options.include_oracle {
        entries.extend(
            grid.oracle_states()
                .par_iter()
                .flat_map_iter(|q| oracle_entries(q, grid.oracle_s_max, options.precision))
                .collect::<Vec<_>>(),
        );
        entries.extend(orthonormality_entries(grid, options.precision));
    }
    Report::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let mut opts = VerifyOptions::new(GridSize::Small);
        opts.include_oracle = false;
        let report = run(&opts);
        assert!(report.all_ok(), "{:?}", report.first_failure());
        assert!(report.entries.len() > 100);
    }

    #[test]
    fn perturbation_is_caught() {
        let mut opts = VerifyOptions::new(GridSize::Small);
        opts.include_oracle = false;
        opts.perturb = true;
        let report = run(&opts);
        assert!(!report.all_ok());
        let first = report.first_failure().unwrap();
        assert_eq!(first.status, Status::Disagree);
    }

    #[test]
    fn oracle_entries_pass_for_a_state() {
        let q = QuantumNumbers::new(3, 1, 1).unwrap();
        let entries = oracle_entries(&q, 4, Precision::default());
        assert!(entries.iter().all(|e| e.status.is_ok()), "{entries:?}");
    }

    #[test]
    fn grid_names() {
        assert_eq!("large".parse::<GridSize>().unwrap(), GridSize::Large);
        assert!("huge".parse::<GridSize>().is_err());
        assert_eq!(GridSize::Default.to_string(), "default");
    }
}
