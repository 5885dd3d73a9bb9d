//! Machine-readable run reports.
//!
//! Every command emits one [`Report`]: the command name, its parameters
//! echoed back (rationals as `"p/q"` strings so exactness survives
//! serialization), the results, the erratum findings collected along the
//! way, and an overall pass/fail status. Status is `pass` iff every residual
//! check stayed within its declared tolerance; findings are informational
//! and never flip the status.

use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

/// A closed-form constant or expression that disagrees with unitarity or
/// with the representation oracle, with both values recorded.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ErratumFinding {
    /// where the discrepancy lives (formula and probe point)
    pub location: String,
    /// the value or reading as printed
    pub expected: String,
    /// the value forced by unitarity / the recurrence / the oracle
    pub observed: String,
    /// constant absorbed when matching the two sides, when meaningful
    #[serde(skip_serializing_if = "Option::is_none")]
    pub absorbed_constant: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One residual check inside a suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    /// true when the check ran in exact rational arithmetic (the residual is
    /// then exactly zero or the check failed)
    pub exact: bool,
    pub pass: bool,
}

impl CheckResult {
    pub fn float(name: impl Into<String>, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            max_residual,
            tolerance,
            exact: false,
            pass: max_residual <= tolerance,
        }
    }

    pub fn exact(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            max_residual: if ok { 0.0 } else { f64::INFINITY },
            tolerance: 0.0,
            exact: true,
            pass: ok,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: serde_json::Value,
    pub results: serde_json::Value,
    pub erratum_findings: Vec<ErratumFinding>,
    pub status: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Writes the JSON report atomically (temp file + rename).
    pub fn write_atomic(&self, path: &Path) -> std::io::Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(self.to_json().as_bytes())?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let report = Report {
            command: "verify".into(),
            params: serde_json::json!({"suite": "genfun", "max_level": 8}),
            results: serde_json::json!({"max_residual": 1.5e-12}),
            erratum_findings: vec![ErratumFinding {
                location: "probe".into(),
                expected: "1".into(),
                observed: "1/2".into(),
                absorbed_constant: Some(1.0),
            }],
            status: Status::Pass,
        };
        let text = report.to_json();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back.command, "verify");
        assert_eq!(back.erratum_findings, report.erratum_findings);
        assert!(back.passed());
        assert!(text.contains("\"status\": \"pass\""));
    }

    #[test]
    fn check_results_apply_tolerances() {
        assert!(CheckResult::float("x", 1e-12, 1e-10).pass);
        assert!(!CheckResult::float("x", 1e-9, 1e-10).pass);
        assert!(CheckResult::exact("x", true).pass);
    }
}
