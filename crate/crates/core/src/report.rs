use serde::{Deserialize, Serialize};

/// A single named verification check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub detail: String,
}

/// Point/line counts attached to geometry reports.
///
/// `line_sizes` lists the distinct line cardinalities in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryStats {
    #[serde(rename = "Q")]
    pub q: usize,
    pub lines: usize,
    pub line_sizes: Vec<usize>,
    pub translations: usize,
}

/// Outcome of a verification suite: named pass/fail checks plus counts.
///
/// Deterministic for fixed input: checks are sorted by name on emission and
/// nothing time-dependent is recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<GeometryStats>,
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport {
            checks: Vec::new(),
            stats: None,
        }
    }

    pub fn push(&mut self, name: &str, pass: bool, witness: Option<Vec<usize>>, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            witness,
            detail,
        });
    }

    pub fn pass(&mut self, name: &str, detail: impl Into<String>) {
        self.push(name, true, None, detail.into());
    }

    pub fn fail(&mut self, name: &str, witness: Vec<usize>, detail: impl Into<String>) {
        self.push(name, false, Some(witness), detail.into());
    }

    /// Record `pass`, attaching the witness only on failure.
    pub fn record(
        &mut self,
        name: &str,
        pass: bool,
        witness: Vec<usize>,
        detail: impl Into<String>,
    ) {
        if pass {
            self.pass(name, detail);
        } else {
            self.fail(name, witness, detail);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Append another report's checks (used when a suite embeds a sub-suite).
    pub fn merge(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
        if self.stats.is_none() {
            self.stats = other.stats;
        }
    }

    /// Canonical form: checks sorted by name. Aggregation order never leaks.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }
}

impl Default for AxiomReport {
    fn default() -> Self {
        Self::new()
    }
}
