//! Pass/fail bookkeeping for the exhaustive identity checks.

use std::fmt;

use serde::Serialize;

/// One identity checked over a finite family of cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub cases: usize,
    /// First failing case, if any.
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(identity: impl Into<String>) -> Self {
        Check {
            identity: identity.into(),
            cases: 0,
            counterexample: None,
        }
    }

    /// Record one case; `describe` runs only for the first failure.
    pub fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    /// Record a case whose evaluation itself failed.
    pub fn expect_ok<T, E: fmt::Display>(
        &mut self,
        result: Result<T, E>,
        context: impl FnOnce() -> String,
    ) -> Option<T> {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                self.expect(false, || format!("{}: {e}", context()));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.cases > 0
    }
}

/// A titled group of checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.title)?;
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "  [{status}] {} ({} cases)", c.identity, c.cases)?;
            if let Some(ce) = &c.counterexample {
                write!(f, "\n         counterexample: {ce}")?;
            } else if c.cases == 0 {
                write!(f, "\n         no cases were checked")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
