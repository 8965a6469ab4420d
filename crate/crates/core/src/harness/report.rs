use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub cases: u64,
    /// Named tallies observed along the way (e.g. how many elements were
    /// found smooth).
    #[serde(default)]
    pub counts: BTreeMap<String, u64>,
    /// Counterexamples, sorted.
    pub failures: Vec<String>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "{} [{}]: {} cases, {} failures, {} ms",
            self.suite,
            params.join(" "),
            self.cases,
            self.failures.len(),
            self.wall_time_ms
        )
    }
}

/// Accumulates cases and failures while a suite runs.
pub(crate) struct ReportBuilder {
    report: VerificationReport,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(suite: &str) -> Self {
        ReportBuilder {
            report: VerificationReport {
                suite: suite.to_string(),
                parameters: BTreeMap::new(),
                cases: 0,
                counts: BTreeMap::new(),
                failures: Vec::new(),
                wall_time_ms: 0,
            },
            started: Instant::now(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.report
            .parameters
            .insert(key.to_string(), value.to_string());
        self
    }

    pub(crate) fn count(&mut self, key: &str, n: u64) {
        *self.report.counts.entry(key.to_string()).or_default() += n;
    }

    pub(crate) fn absorb(&mut self, cases: u64, failures: Vec<String>) {
        self.report.cases += cases;
        self.report.failures.extend(failures);
    }

    pub(crate) fn finish(mut self) -> VerificationReport {
        self.report.failures.sort();
        self.report.failures.dedup();
        self.report.wall_time_ms = self.started.elapsed().as_millis() as u64;
        self.report
    }
}
