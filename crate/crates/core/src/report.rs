//! Verification reports: named checks with a status and a JSON witness.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    suite: String,
    checks: Vec<Check>,
    exit_code: i32,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, witness: Value) {
        self.checks.push(Check { name: name.into(), status, witness });
    }

    /// Pass when `ok`, fail otherwise.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: Value) -> bool {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, witness);
        ok
    }

    pub fn info(&mut self, name: impl Into<String>, witness: Value) {
        self.push(name, Status::Info, witness);
    }

    /// Records an error as a failed check instead of aborting the suite.
    pub fn error(&mut self, name: impl Into<String>, err: &Error) {
        self.push(name, Status::Fail, Value::String(err.to_string()));
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(Wire {
            suite: self.suite.clone(),
            checks: self.checks.clone(),
            exit_code: self.exit_code(),
        })
        .expect("report serializes")
    }

    /// Parses a report, rejecting one whose recorded exit code disagrees
    /// with its checks.
    pub fn from_json(v: &Value) -> Result<Report> {
        let w: Wire = serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
        let r = Report { suite: w.suite, checks: w.checks };
        if r.exit_code() != w.exit_code {
            return Err(Error::Invalid(format!("exit_code {} does not match the checks", w.exit_code)));
        }
        Ok(r)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            let w = match &c.witness {
                Value::Null => String::new(),
                Value::String(s) => format!("  {s}"),
                other => format!("  {other}"),
            };
            writeln!(f, "  [{}] {}{}", c.status, c.name, w)?;
        }
        let fails = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), fails)
    }
}
