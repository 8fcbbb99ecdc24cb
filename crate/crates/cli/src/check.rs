use serde::Serialize;

/// How `measured` is compared with `tolerance`.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Below,
    Above,
    Skipped,
}

/// One verified statement, the unit of every `verify` report.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    pub comparison: Comparison,
    pub tolerance: f64,
    /// `None` when the quantity could not be computed; see `detail`.
    pub measured: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Passes iff `measured < tolerance`.
    pub fn below(name: impl Into<String>, anchor: &str, tolerance: f64, measured: f64) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            comparison: Comparison::Below,
            tolerance,
            measured: Some(measured),
            pass: measured < tolerance,
            detail: None,
        }
    }

    /// Passes iff `measured > tolerance`.
    pub fn above(name: impl Into<String>, anchor: &str, tolerance: f64, measured: f64) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            comparison: Comparison::Above,
            tolerance,
            measured: Some(measured),
            pass: measured > tolerance,
            detail: None,
        }
    }

    /// A check whose quantity failed to compute.
    pub fn failed(
        name: impl Into<String>,
        anchor: &str,
        comparison: Comparison,
        tolerance: f64,
        err: impl ToString,
    ) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            comparison,
            tolerance,
            measured: None,
            pass: false,
            detail: Some(err.to_string()),
        }
    }

    /// A check the contract itself excludes, e.g. a degenerate level.
    pub fn skipped(name: impl Into<String>, anchor: &str, measured: f64, reason: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            comparison: Comparison::Skipped,
            tolerance: 0.0,
            measured: Some(measured),
            pass: true,
            detail: Some(reason.into()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}
