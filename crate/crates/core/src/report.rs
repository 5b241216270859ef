//! Named pass/fail checks shared by every verifier.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Answers to a question (e.g. "is H unimodular") rather than assertions;
    /// a `false` here is not a failure.
    #[serde(skip)]
    pub informational: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, witness, informational: false });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.check(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.check(name, false, Some(witness.into()));
    }

    /// Records a computed answer; never counts as a failure.
    pub fn value(&mut self, name: impl Into<String>, value: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.into(), passed: value, witness: detail, informational: true });
    }

    /// Records the outcome of a check whose failure carries a witness.
    pub fn outcome(&mut self, name: impl Into<String>, witness: Option<String>) {
        let passed = witness.is_none();
        self.check(name, passed, witness);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.informational)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed && !c.informational).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let mark = match (c.passed, c.informational) {
                (true, false) => "ok  ",
                (false, false) => "FAIL",
                (true, true) => "yes ",
                (false, true) => "no  ",
            };
            match &c.witness {
                Some(w) => writeln!(f, "[{mark}] {} ({w})", c.name)?,
                None => writeln!(f, "[{mark}] {}", c.name)?,
            }
        }
        Ok(())
    }
}
