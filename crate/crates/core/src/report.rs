use std::fmt;

use serde::Serialize;

/// Outcome of one named verification check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, witness: Option<String>) -> Self {
        Check {
            id: id.into(),
            passed: witness.is_none(),
            witness,
        }
    }

    pub fn pass(id: impl Into<String>) -> Self {
        Self::new(id, None)
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(id, Some(witness.into()))
    }

    /// Passes when `ok` holds, otherwise records `witness()`.
    pub fn expect(id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(id)
        } else {
            Self::fail(id, witness())
        }
    }

    /// Runs `cases` and keeps the first failing case as the witness.
    pub fn first_failure<T>(
        id: impl Into<String>,
        cases: impl IntoIterator<Item = T>,
        mut failing: impl FnMut(&T) -> Option<String>,
    ) -> Self {
        for c in cases {
            if let Some(w) = failing(&c) {
                return Self::fail(id, w);
            }
        }
        Self::pass(id)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{} {}", status, self.id)?;
        if let Some(w) = &self.witness {
            write!(f, "  witness: {}", w)?;
        }
        Ok(())
    }
}

/// Ordered collection of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report { checks }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Checks whose id starts with `prefix`.
    pub fn group(&self, prefix: &str) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.id.starts_with(prefix))
            .collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}", c)?;
        }
        write!(f, "{} passed, {} failed", self.passed(), self.failed())
    }
}
