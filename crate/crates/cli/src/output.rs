use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use salpeter::{Precision, Report};

pub const PRECISION_VAR: &str = "SALPETER_PRECISION";

#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Io(m) => f.write_str(m),
        }
    }
}

impl From<salpeter::Error> for Failure {
    fn from(e: salpeter::Error) -> Self {
        match e {
            salpeter::Error::NonConvergence(_) | salpeter::Error::IncompatibleRadical(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Writes to `path`, or to stdout when none is given.
pub fn emit(content: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

pub fn precision_from_env() -> Result<Precision, Failure> {
    match std::env::var(PRECISION_VAR) {
        Err(_) => Ok(Precision::default()),
        Ok(raw) => raw
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|&d| d > 0)
            .map(Precision::digits)
            .ok_or_else(|| Failure::Usage(format!("{PRECISION_VAR} must be a positive digit count, got {raw:?}"))),
    }
}

pub fn report_text(report: &Report) -> String {
    let cell = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
    let rows: Vec<[String; 5]> = report
        .entries
        .iter()
        .map(|e| [e.case.clone(), e.method.clone(), cell(&e.value_pq), cell(&e.value_dec), e.status.as_str().into()])
        .collect();
    let header = ["case", "method", "exact", "approx", "status"].map(String::from);
    let mut widths = [0usize; 5];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out.push_str(&format!("{} passed, {} failed\n", report.passed, report.failed));
    out
}

pub fn report_json(report: &Report) -> String {
    let mut s = report.to_json();
    s.push('\n');
    s
}
