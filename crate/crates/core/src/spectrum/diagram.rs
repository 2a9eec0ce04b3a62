use std::fmt::Write as _;

use num::BigUint;

use super::LevelTable;
use crate::rational::{self, rat, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubLevel {
    pub l: u32,
    /// First-order shift `lambda eps1`.
    pub shift: Rational,
    /// Drawn height: `eps0 + exaggeration * shift`.
    pub position: Rational,
    pub degeneracy: BigUint,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramLevel {
    pub level: u64,
    pub baseline: Rational,
    pub sublevels: Vec<SubLevel>,
}

/// Schematic, not-to-scale level diagram: every unperturbed level and its
/// first-order sub-levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub d: u32,
    pub lambda: Rational,
    pub exaggeration: Rational,
    pub levels: Vec<DiagramLevel>,
}

/// Builds the diagram model; the default exaggeration is `0.1 / lambda`.
pub fn diagram_data(table: &LevelTable, exaggeration: Option<Rational>) -> Diagram {
    let exaggeration = exaggeration.unwrap_or_else(|| rat(1, 10) / &table.lambda);
    let levels = (0..=table.n_max())
        .map(|level| {
            let mut baseline = None;
            let sublevels = table
                .rows_at(level)
                .map(|row| {
                    baseline.get_or_insert_with(|| row.eps0.clone());
                    let shift = &table.lambda * &row.eps1;
                    SubLevel {
                        l: row.l,
                        position: &row.eps0 + &exaggeration * &shift,
                        shift,
                        degeneracy: row.degeneracy.clone(),
                        label: if table.d == 1 { format!("N={level}") } else { format!("l={}", row.l) },
                    }
                })
                .collect();
            DiagramLevel { level, baseline: baseline.unwrap_or_default(), sublevels }
        })
        .collect();
    Diagram { d: table.d, lambda: table.lambda.clone(), exaggeration, levels }
}

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 40.0;
const UNIT: f64 = 80.0;
const BASE_X: (f64, f64) = (90.0, 250.0);
const SUB_X: (f64, f64) = (370.0, 530.0);

impl Diagram {
    pub fn sublevel_count(&self) -> usize {
        self.levels.iter().map(|l| l.sublevels.len()).sum()
    }

    fn span(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for level in &self.levels {
            let b = to_f64(&level.baseline);
            lo = lo.min(b);
            hi = hi.max(b);
            for s in &level.sublevels {
                lo = lo.min(to_f64(&s.position));
            }
        }
        if lo > hi {
            (0.0, 1.0)
        } else {
            (lo - 0.5, hi + 0.5)
        }
    }

    pub fn to_svg(&self) -> String {
        let (lo, hi) = self.span();
        let height = (hi - lo) * UNIT + 2.0 * MARGIN;
        let y = |e: f64| MARGIN + (hi - e) * UNIT;
        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(
            svg,
            r#"<title>d={} oscillator levels, lambda={} (not to scale)</title>"#,
            self.d,
            rational::to_pq(&self.lambda)
        );
        let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(svg, r#"<text x="{:.0}" y="20">unperturbed</text>"#, BASE_X.0);
        let _ = writeln!(svg, r#"<text x="{:.0}" y="20">first order</text>"#, SUB_X.0);
        for level in &self.levels {
            let yb = y(to_f64(&level.baseline));
            let _ = writeln!(
                svg,
                r#"<line class="baseline" x1="{:.1}" y1="{yb:.2}" x2="{:.1}" y2="{yb:.2}" stroke="black" stroke-width="2"/>"#,
                BASE_X.0, BASE_X.1
            );
            let _ = writeln!(
                svg,
                r#"<text x="10" y="{:.2}">N={} ({})</text>"#,
                yb + 4.0,
                level.level,
                rational::to_pq(&level.baseline)
            );
            for sub in &level.sublevels {
                let ys = y(to_f64(&sub.position));
                let _ = writeln!(
                    svg,
                    r#"<line class="connector" x1="{:.1}" y1="{yb:.2}" x2="{:.1}" y2="{ys:.2}" stroke="gray" stroke-dasharray="4 3"/>"#,
                    BASE_X.1, SUB_X.0
                );
                let _ = writeln!(
                    svg,
                    r#"<line class="sublevel" x1="{:.1}" y1="{ys:.2}" x2="{:.1}" y2="{ys:.2}" stroke="firebrick" stroke-width="2"/>"#,
                    SUB_X.0, SUB_X.1
                );
                let _ = writeln!(
                    svg,
                    r#"<text x="{:.1}" y="{:.2}">{} (g={})</text>"#,
                    SUB_X.1 + 8.0,
                    ys + 4.0,
                    sub.label,
                    sub.degeneracy
                );
            }
        }
        svg.push_str("</svg>\n");
        svg
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "d={} lambda={} exaggeration={} (not to scale)\n",
            self.d,
            rational::to_pq(&self.lambda),
            rational::to_pq(&self.exaggeration)
        );
        for level in &self.levels {
            let _ = writeln!(out, "N={} eps0={}", level.level, rational::to_pq(&level.baseline));
            for sub in &level.sublevels {
                let _ = writeln!(
                    out,
                    "  {:<8} shift={:<24} ~{:<18} g={}",
                    sub.label,
                    rational::to_pq(&sub.shift),
                    rational::to_decimal(&sub.shift, 12),
                    sub.degeneracy
                );
            }
        }
        out
    }
}
