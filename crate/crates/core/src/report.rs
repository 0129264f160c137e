//! Audit reports: one entry per check, with expected status and witness.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::orders::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Counterexample,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Counterexample => "counterexample",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub expected: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, expected: Status, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Pass,
            expected,
            detail: Some(detail.into()),
            witness: None,
        }
    }

    /// A violated property: `counterexample` when a witness is attached, `fail` otherwise.
    pub fn violated(
        name: impl Into<String>,
        expected: Status,
        detail: impl Into<String>,
        witness: Option<Witness>,
    ) -> Self {
        let status = if witness.is_some() {
            Status::Counterexample
        } else {
            Status::Fail
        };
        CheckResult {
            name: name.into(),
            status,
            expected,
            detail: Some(detail.into()),
            witness,
        }
    }

    pub fn from_outcome(
        name: impl Into<String>,
        expected: Status,
        detail: impl Into<String>,
        violation: Option<Witness>,
    ) -> Self {
        match violation {
            None => CheckResult::pass(name, expected, detail),
            Some(w) => CheckResult::violated(name, expected, detail, Some(w)),
        }
    }

    /// Status matches the expectation, and any counterexample replays.
    pub fn meets_expectation(&self) -> bool {
        if self.status != self.expected {
            return false;
        }
        match (&self.status, &self.witness) {
            (Status::Counterexample, Some(w)) => w.replay().is_ok(),
            (Status::Counterexample, None) => false,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl AuditReport {
    pub fn new(suite: impl Into<String>) -> Self {
        AuditReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckResult>) {
        self.checks.extend(checks);
    }

    pub fn all_met(&self) -> bool {
        self.checks.iter().all(CheckResult::meets_expectation)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = (&str, &Witness)> {
        self.checks
            .iter()
            .filter_map(|c| c.witness.as_ref().map(|w| (c.name.as_str(), w)))
    }

    /// One line per check: `[ok|UNEXPECTED] status (expected ...) name: detail`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite);
        for c in &self.checks {
            let mark = if c.meets_expectation() {
                "ok"
            } else {
                "UNEXPECTED"
            };
            let _ = write!(
                out,
                "  [{mark}] {:<14} (expected {}) {}",
                c.status.label(),
                c.expected.label(),
                c.name
            );
            if let Some(d) = &c.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
        }
        out
    }
}
