//! Machine-readable verification reports.
//!
//! One schema serves the library checks, the acceptance suite and the
//! CLI. Field order is fixed by the struct definitions, all content is a
//! pure function of the inputs, and no timestamps or paths are recorded,
//! so serialising the same run twice yields identical bytes.

use serde::{Deserialize, Serialize};

/// Schema version of [`VerificationReport`].
pub const REPORT_VERSION: u32 = 1;

/// Outcome of a single check.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The check held within its tolerance.
    Pass,
    /// The check failed its tolerance.
    Fail,
    /// Measured output recorded without a pass/fail judgement.
    Info,
}

/// A single named check with its measured residual.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    /// Measured residual; `None` for purely structural checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// True when the residual is an exact symbolic zero, not merely small.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exact_zero: bool,
    /// Tolerance the residual was compared against, when any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Free-form detail (measured values, counts, notes).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckEntry {
    /// A structural check that either holds exactly or not.
    pub fn structural(name: impl Into<String>, ok: bool) -> Self {
        CheckEntry {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: None,
            exact_zero: ok,
            tolerance: None,
            detail: None,
        }
    }

    /// A residual compared against a tolerance.
    pub fn residual(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        CheckEntry {
            name: name.into(),
            status: if residual.abs() <= tol {
                Status::Pass
            } else {
                Status::Fail
            },
            residual: Some(residual),
            exact_zero: false,
            tolerance: Some(tol),
            detail: None,
        }
    }

    /// A residual known to be an exact symbolic zero.
    pub fn exact(name: impl Into<String>, is_zero: bool) -> Self {
        CheckEntry {
            name: name.into(),
            status: if is_zero { Status::Pass } else { Status::Fail },
            residual: Some(if is_zero { 0.0 } else { f64::NAN }),
            exact_zero: is_zero,
            tolerance: None,
            detail: None,
        }
    }

    /// Measured output recorded without judgement.
    pub fn info(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckEntry {
            name: name.into(),
            status: Status::Info,
            residual: None,
            exact_zero: false,
            tolerance: None,
            detail: Some(detail.into()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_residual(mut self, residual: f64) -> Self {
        self.residual = Some(residual);
        self
    }
}

/// A full report: an ordered list of checks plus run parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub report_version: u32,
    pub command: String,
    pub engine_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tolerance: f64,
    pub checks: Vec<CheckEntry>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, tolerance: f64) -> Self {
        VerificationReport {
            report_version: REPORT_VERSION,
            command: command.into(),
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
            tolerance,
            checks: Vec::new(),
            overall: Status::Pass,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, entry: CheckEntry) {
        if entry.status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(entry);
    }

    pub fn extend(&mut self, entries: impl IntoIterator<Item = CheckEntry>) {
        for e in entries {
            self.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.overall != Status::Fail
    }

    /// Deterministic pretty JSON rendering.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialisation cannot fail")
    }

    /// One `name: status (residual)` line per check.
    pub fn summary_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Info => "info",
                };
                match (c.residual, c.exact_zero) {
                    (_, true) => format!("{}: {} (exact zero)", c.name, status),
                    (Some(r), false) => format!("{}: {} (residual {:.3e})", c.name, status, r),
                    (None, false) => match &c.detail {
                        Some(d) => format!("{}: {} ({})", c.name, status, d),
                        None => format!("{}: {}", c.name, status),
                    },
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_serialisation_is_deterministic() {
        let mut r1 = VerificationReport::new("axioms", 1e-12).with_seed(7);
        r1.push(CheckEntry::structural("generators-anticommute", true));
        r1.push(CheckEntry::residual("closure", 3e-16, 1e-12));
        let mut r2 = VerificationReport::new("axioms", 1e-12).with_seed(7);
        r2.push(CheckEntry::structural("generators-anticommute", true));
        r2.push(CheckEntry::residual("closure", 3e-16, 1e-12));
        assert_eq!(r1.to_json(), r2.to_json());
        assert!(r1.passed());
    }

    #[test]
    fn any_failing_check_fails_the_report() {
        let mut r = VerificationReport::new("axioms", 1e-12);
        r.push(CheckEntry::residual("bad", 1.0, 1e-12));
        r.push(CheckEntry::info("note", "measured 1.0"));
        assert_eq!(r.overall, Status::Fail);
        assert!(!r.passed());
    }

    #[test]
    fn report_round_trips_through_json() {
        let mut r = VerificationReport::new("charges", 1e-12);
        r.push(CheckEntry::exact("partition", true));
        let parsed: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed.report_version, REPORT_VERSION);
        assert_eq!(parsed.checks.len(), 1);
        assert_eq!(parsed.checks[0].status, Status::Pass);
    }
}
