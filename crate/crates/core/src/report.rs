//! Verdict reports shared by every check in the crate.

use std::fmt;

use serde::Serialize;

/// The first failing case of a check, with its nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub case: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, cases: 0, witness: None }
    }

    /// Records one evaluated case; the first failure becomes the witness.
    pub fn record(&mut self, ok: bool, case: impl FnOnce() -> String, residual: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            if self.passed {
                self.witness = Some(Witness { case: case(), residual: residual() });
            }
            self.passed = false;
        }
    }

    pub fn fail(name: impl Into<String>, case: impl Into<String>, residual: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            cases: 1,
            witness: Some(Witness { case: case.into(), residual: residual.into() }),
        }
    }
}

/// A named list of checks; passes when every check passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends another report's checks under a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {} ({} cases)", if c.passed { "pass" } else { "FAIL" }, c.name, c.cases)?;
            if let Some(w) = &c.witness {
                write!(f, " witness {} residual {}", w.case, w.residual)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub type ValidationReport = Report;
