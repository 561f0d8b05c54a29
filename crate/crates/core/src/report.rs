//! Experiment report schema.
//!
//! Reports are schema-stable JSON with keys in fixed order and no
//! wall-clock content, so a suite run reproduces byte-identically for a
//! fixed (suite, trials, baseSeed, budget) regardless of worker count.
//! Search effort is recorded as deterministic node counts; wall time, which
//! cannot be reproducible, goes to stderr logging instead of the report.

use crate::oracle::SearchBudget;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Copy, Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BudgetSpec {
    pub max_nodes: Option<u64>,
    pub time_limit_ms: Option<u64>,
}

impl From<&SearchBudget> for BudgetSpec {
    fn from(b: &SearchBudget) -> Self {
        Self {
            max_nodes: b.max_nodes,
            time_limit_ms: b.time_limit.map(|d| d.as_millis() as u64),
        }
    }
}

/// One trial: `measured` against `bound` per the suite's convention,
/// `exact` false when a budget cap truncated the underlying search, and
/// `cost_nodes` the deterministic search effort.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub gen_spec: String,
    pub measured: i64,
    pub bound: i64,
    pub holds: bool,
    pub exact: bool,
    pub cost_nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Copy, Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Aggregate {
    pub trials: u64,
    /// Trials with `holds: false` and `exact: true` — genuine counterexamples.
    pub failures: u64,
    /// Trials with `holds: false` and `exact: false` — budget ran out before
    /// the bound was cleared; never counted as failures.
    pub inconclusive: u64,
    /// Minimum of measured - bound over conclusive trials.
    pub min_slack: Option<i64>,
    pub checked_tuples: u64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentReport {
    pub schema_version: u32,
    pub suite: String,
    pub trials: u64,
    pub base_seed: u64,
    pub budget: BudgetSpec,
    pub records: Vec<TrialRecord>,
    pub aggregate: Aggregate,
}

impl ExperimentReport {
    pub fn new(
        suite: &str,
        trials: u64,
        base_seed: u64,
        budget: &SearchBudget,
        records: Vec<TrialRecord>,
    ) -> Self {
        let failures = records.iter().filter(|r| !r.holds && r.exact).count() as u64;
        let inconclusive = records.iter().filter(|r| !r.holds && !r.exact).count() as u64;
        let min_slack = records
            .iter()
            .filter(|r| r.holds || r.exact)
            .map(|r| r.measured - r.bound)
            .min();
        let checked_tuples = records.iter().filter_map(|r| r.tuples).sum();
        Self {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            trials,
            base_seed,
            budget: budget.into(),
            records,
            aggregate: Aggregate {
                trials: trials,
                failures,
                inconclusive,
                min_slack,
                checked_tuples,
            },
        }
    }

    pub fn has_failures(&self) -> bool {
        self.aggregate.failures > 0
    }

    /// Pretty JSON, UTF-8, LF, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
