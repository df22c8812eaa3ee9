//! Linear-size separating path systems for general graphs.
//!
//! All strategies share one skeleton. Split the edges into two sides,
//! decompose one side into at most `n` paths and then into matchings that
//! meet each of those paths at most once, and thread every matching into
//! a few long paths using edges of the other side. Repeating with the sides
//! swapped separates everything. The strategies differ in how they thread
//! matchings together.
//!
//! Every strategy is deterministic in its seed, and every returned outcome
//! has been checked by [`verify`](crate::verify::verify).

mod alternating;
mod common;
mod dense;
mod min_degree;
mod portfolio;
mod random;
mod split;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, PathSystem};
use crate::verify::verify;

pub use alternating::{alternating_cover, split_alternating};
pub use common::CommonNeighborGraph;
pub use dense::{dense_strategy, dense_trace, DenseTrace, LevelTrace};
pub use min_degree::{min_degree_strategy, min_degree_trace, DirectionTrace, MinDegreeTrace};
pub use portfolio::{portfolio, portfolio_with, trivial_strategy, StrategyKind, StrategyOptions};
pub use random::random_graph_strategy;
pub use split::{random_split, SplitPair};

/// Retry budget used when callers do not pick one.
pub const DEFAULT_RETRIES: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StrategyError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no valid split after {retries} attempts")]
    RetriesExhausted { retries: usize },
    #[error("strategy failed at {stage}: {detail}")]
    Failed { stage: &'static str, detail: String },
}

impl StrategyError {
    pub(crate) fn failed(stage: &'static str, detail: impl std::fmt::Display) -> Self {
        StrategyError::Failed {
            stage,
            detail: detail.to_string(),
        }
    }
}

/// A path system produced by a named strategy, with its verdict.
#[derive(Debug, Clone, Serialize)]
pub struct StrategyOutcome {
    #[serde(skip)]
    pub system: PathSystem,
    pub strategy_name: String,
    pub verified: bool,
    pub size: usize,
    pub diagnostics: BTreeMap<String, i64>,
}

impl StrategyOutcome {
    /// Removes repeated members, then runs the verifier.
    pub fn finish(g: &Graph, name: &str, mut system: PathSystem, mut diagnostics: BTreeMap<String, i64>) -> Self {
        let removed = system.dedup_edge_sets();
        diagnostics.insert("duplicates_removed".into(), removed as i64);
        let verified = verify(g, &system).map(|r| r.separating).unwrap_or(false);
        StrategyOutcome {
            size: system.len(),
            system,
            strategy_name: name.to_string(),
            verified,
            diagnostics,
        }
    }
}

pub(crate) fn check_fraction(name: &str, x: f64, allow_zero: bool) -> Result<(), StrategyError> {
    let ok = x.is_finite() && x <= 1.0 && (x > 0.0 || (allow_zero && x == 0.0));
    if ok {
        Ok(())
    } else {
        Err(StrategyError::InvalidParameter(format!("{name} = {x} is outside its range")))
    }
}

pub(crate) fn ceil_at_least_one(x: f64) -> usize {
    (x.ceil() as usize).max(1)
}
