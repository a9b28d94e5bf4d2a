use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Where the expected outcome of a check comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A defining law of the structure, checked on inputs.
    Axiom,
    /// Agreement between two independent computations.
    CrossCheck,
    /// A closed-form answer for a structured case.
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Falsified,
    /// Findings only; failing checks do not fail the run.
    Report,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Report => 0,
            Status::Falsified => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub provenance: Provenance,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, provenance: Provenance, passed: bool, detail: impl Serialize) -> Self {
        Check {
            name: name.into(),
            provenance,
            passed,
            detail: serde_json::to_value(detail).expect("report values serialize"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub version: &'static str,
    pub command: String,
    pub seed: u64,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl Report {
    /// `informational` reports never fail the run.
    pub fn new(command: impl Into<String>, seed: u64, checks: Vec<Check>, informational: bool) -> Self {
        let status = if informational {
            Status::Report
        } else if checks.iter().all(|c| c.passed) {
            Status::Pass
        } else {
            Status::Falsified
        };
        Report {
            schema_version: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            seed,
            status,
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{} (seed {}): {:?}", self.command, self.seed, self.status);
        let _ = writeln!(out, "{:<width$}  {:<11}  result", "check", "provenance");
        for c in &self.checks {
            let prov = serde_json::to_value(c.provenance).expect("provenance serializes");
            let verdict = if c.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{:<width$}  {:<11}  {verdict}", c.name, prov.as_str().unwrap_or(""));
        }
        out
    }
}
