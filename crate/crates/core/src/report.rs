//! Machine-readable result records shared by `verify` and the CLI.

use serde::{Serialize, Serializer};

use crate::rational::{self, Rational};

/// Significant digits used for every decimal rendering.
pub const DECIMAL_DIGITS: usize = 12;

pub fn serialize_pq<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&rational::to_pq(value))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Agree,
    Disagree,
    Pass,
    Fail,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Agree | Status::Pass)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Agree => "AGREE",
            Status::Disagree => "DISAGREE",
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

/// One line of a report: `{case, method, value_pq, value_dec, status}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub case: String,
    pub method: String,
    pub value_pq: Option<String>,
    pub value_dec: Option<String>,
    pub status: Status,
}

impl ReportEntry {
    pub fn exact(case: impl Into<String>, method: impl Into<String>, value: &Rational, status: Status) -> Self {
        ReportEntry {
            case: case.into(),
            method: method.into(),
            value_pq: Some(rational::to_pq(value)),
            value_dec: Some(rational::to_decimal(value, DECIMAL_DIGITS)),
            status,
        }
    }

    /// A floating-point result; `value_pq` stays empty.
    pub fn approximate(case: impl Into<String>, method: impl Into<String>, value_dec: String, status: Status) -> Self {
        ReportEntry { case: case.into(), method: method.into(), value_pq: None, value_dec: Some(value_dec), status }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(entries: Vec<ReportEntry>) -> Self {
        let passed = entries.iter().filter(|e| e.status.is_ok()).count();
        let failed = entries.len() - passed;
        Report { entries, passed, failed }
    }

    pub fn first_failure(&self) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| !e.status.is_ok())
    }

    pub fn all_ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn entry_json_shape() {
        let e = ReportEntry::exact("d=3 n=0 l=0", "kramers", &rat(-15, 32), Status::Agree);
        let v: serde_json::Value = serde_json::to_value(&e).unwrap();
        assert_eq!(v["value_pq"], "-15/32");
        assert_eq!(v["value_dec"], "-0.468750000000");
        assert_eq!(v["status"], "AGREE");
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 5);
    }

    #[test]
    fn report_counts() {
        let r = Report::new(vec![
            ReportEntry::exact("a", "x", &rat(1, 2), Status::Pass),
            ReportEntry::approximate("b", "y", "1.0".into(), Status::Fail),
        ]);
        assert!(!r.all_ok());
        assert_eq!((r.passed, r.failed), (1, 1));
    }
}
