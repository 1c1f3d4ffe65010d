//! Closed-form predictions for `dem` and a harness that checks them
//! against the exact solver.
//!
//! Predictions live in one table, [`registry::REGISTRY`]; each entry maps a
//! graph expression (plus precomputed facts about its factors) to an exact
//! value or an interval. [`harness`] turns those into
//! [`VerificationRecord`]s, and [`checks`] holds the structural checks
//! that do not reduce to a single number (equality characterizations of the
//! Cartesian bounds, layer locality of monitoring in Cartesian products).

pub mod checks;
pub mod harness;
pub mod registry;

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::cover;
use crate::error::Result;
use crate::graph::Graph;
use crate::monitoring::{self, DemOptions};
use crate::vset::VertexSet;

pub use checks::{
    check_layer_locality, check_lower_equality_condition, check_upper_equality_condition,
    LayerLocalityReport,
};
pub use harness::{run_suite, verify_instance, Suite, VerifyConfig};
pub use registry::{predicted_dem, Prediction, Rule, REGISTRY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PredictedValue {
    Exact { value: usize },
    Interval { lower: usize, upper: usize },
}

impl PredictedValue {
    pub fn exact(value: usize) -> Self {
        PredictedValue::Exact { value }
    }

    /// `None` when `lower > upper`.
    pub fn interval(lower: usize, upper: usize) -> Option<Self> {
        (lower <= upper).then_some(PredictedValue::Interval { lower, upper })
    }

    pub fn admits(self, value: usize) -> bool {
        match self {
            PredictedValue::Exact { value: v } => v == value,
            PredictedValue::Interval { lower, upper } => (lower..=upper).contains(&value),
        }
    }
}

impl fmt::Display for PredictedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredictedValue::Exact { value } => write!(f, "{value}"),
            PredictedValue::Interval { lower, upper } => write!(f, "{lower}..{upper}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Outcome of checking one claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub instance: String,
    /// Registry rule or check name.
    pub claim: String,
    pub predicted: Option<PredictedValue>,
    pub computed: Option<usize>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationRecord {
    pub fn judged(instance: String, claim: impl Into<String>, predicted: PredictedValue, computed: usize) -> Self {
        VerificationRecord {
            instance,
            claim: claim.into(),
            predicted: Some(predicted),
            computed: Some(computed),
            verdict: if predicted.admits(computed) {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            note: None,
            runtime: Duration::ZERO,
        }
    }

    pub fn skipped(instance: String, claim: impl Into<String>, note: impl Into<String>) -> Self {
        VerificationRecord {
            instance,
            claim: claim.into(),
            predicted: None,
            computed: None,
            verdict: Verdict::Skipped,
            note: Some(note.into()),
            runtime: Duration::ZERO,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub const CSV_HEADER: &'static str = "instance,claim,predicted,computed,verdict";

    /// CSV line; `timings` appends the runtime in milliseconds.
    pub fn csv_row(&self, timings: bool) -> String {
        let mut row = format!(
            "{},{},{},{},{}",
            self.instance.replace(',', ";"),
            self.claim.replace(',', ";"),
            self.predicted.map(|p| p.to_string()).unwrap_or_default(),
            self.computed.map(|c| c.to_string()).unwrap_or_default(),
            self.verdict
        );
        if timings {
            row.push_str(&format!(",{:.3}", self.runtime.as_secs_f64() * 1e3));
        }
        row
    }
}

/// Solver-derived facts about a factor graph that the predictions consume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorFacts {
    pub order: usize,
    pub size: usize,
    pub dem: usize,
    pub cover: usize,
    pub radius: u32,
    pub is_tree: bool,
    pub is_cycle: bool,
    pub is_complete: bool,
    /// Every minimum DEM set, sorted lexicographically.
    pub minimum_dem_sets: Vec<VertexSet>,
}

impl FactorFacts {
    pub fn compute(g: &Graph, opts: &DemOptions) -> Result<Self> {
        let opts = DemOptions {
            enumerate_all: true,
            ..*opts
        };
        let dem = monitoring::dem_number(g, &opts)?;
        let cover = cover::vertex_cover_number_capped(g, opts.max_n)?;
        let sets = dem
            .all_minimum_sets
            .expect("enumeration was requested")
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        Ok(FactorFacts {
            order: g.order(),
            size: g.size(),
            dem: dem.dem,
            cover: cover.value,
            radius: g.radius(),
            is_tree: g.is_tree(),
            is_cycle: g.order() >= 3 && g.size() == g.order() && g.vertices().all(|v| g.degree(v) == 2),
            is_complete: g.is_complete(),
            minimum_dem_sets: sets,
        })
    }

    pub fn has_unique_minimum_set(&self) -> bool {
        self.minimum_dem_sets.len() == 1
    }
}
