use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constructions::{
    same_labeled_graph, separate_hair_comb, separate_ladder, separate_path_graph, separate_star, separate_tree,
    ConstructionError,
};
use crate::generators::{make_hair_comb, make_ladder, make_path_graph, make_star};
use crate::graph::{Graph, PathSystem};

use super::dense::dense_strategy;
use super::min_degree::min_degree_strategy;
use super::random::{random_graph_strategy, singletons};
use super::{StrategyError, StrategyOutcome, DEFAULT_RETRIES};

/// Every strategy the crate can run, in portfolio tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyKind {
    Tree,
    Path,
    Star,
    Comb,
    Ladder,
    MinDegree,
    Dense,
    Random,
    Trivial,
    Portfolio,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 10] = [
        StrategyKind::Tree,
        StrategyKind::Path,
        StrategyKind::Star,
        StrategyKind::Comb,
        StrategyKind::Ladder,
        StrategyKind::MinDegree,
        StrategyKind::Dense,
        StrategyKind::Random,
        StrategyKind::Trivial,
        StrategyKind::Portfolio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Tree => "tree",
            StrategyKind::Path => "path",
            StrategyKind::Star => "star",
            StrategyKind::Comb => "comb",
            StrategyKind::Ladder => "ladder",
            StrategyKind::MinDegree => "min-degree",
            StrategyKind::Dense => "dense",
            StrategyKind::Random => "random",
            StrategyKind::Trivial => "trivial",
            StrategyKind::Portfolio => "portfolio",
        }
    }

    /// Runs this strategy on `g`.
    pub fn run(self, g: &Graph, opts: &StrategyOptions) -> Result<StrategyOutcome, StrategyError> {
        let fixed = |name: &str, r: Result<PathSystem, ConstructionError>| {
            r.map(|ps| StrategyOutcome::finish(g, name, ps, BTreeMap::new()))
                .map_err(|e| StrategyError::Precondition(e.to_string()))
        };
        let n = g.n();
        let recognised = |reference: Option<Graph>| match reference {
            Some(r) if same_labeled_graph(g, &r) => Ok(()),
            _ => Err(StrategyError::Precondition(format!("graph is not the standard {}", self.name()))),
        };
        match self {
            StrategyKind::Tree => fixed("tree", separate_tree(g)),
            StrategyKind::Path => {
                recognised(make_path_graph(n).ok())?;
                fixed("path", separate_path_graph(n))
            }
            StrategyKind::Star => {
                recognised(make_star(n).ok())?;
                fixed("star", separate_star(n))
            }
            StrategyKind::Comb => {
                recognised(n.is_multiple_of(3).then(|| make_hair_comb(n / 3).ok()).flatten())?;
                fixed("comb", separate_hair_comb(n / 3))
            }
            StrategyKind::Ladder => {
                recognised(n.is_multiple_of(2).then(|| make_ladder(n / 2).ok()).flatten())?;
                fixed("ladder", separate_ladder(n / 2))
            }
            StrategyKind::MinDegree => {
                let c = opts.c.unwrap_or_else(|| measured_c(g));
                min_degree_strategy(g, c, opts.seed, opts.max_retries)
            }
            StrategyKind::Dense => dense_strategy(g, opts.c.unwrap_or(opts.dense_c), opts.seed, opts.max_retries),
            StrategyKind::Random => random_graph_strategy(g, opts.p.unwrap_or_else(|| g.density()), opts.seed, opts.max_retries),
            StrategyKind::Trivial => Ok(trivial_strategy(g)),
            StrategyKind::Portfolio => Ok(portfolio_with(g, opts)),
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown strategy `{s}`"))
    }
}

/// Parameters shared by all strategies.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyOptions {
    pub seed: u64,
    /// Degree/density parameter. `None` means the measured `δ/n` for the
    /// min-degree strategy and `dense_c` for the dense one.
    pub c: Option<f64>,
    /// Edge probability for the random strategy; `None` means the density of `g`.
    pub p: Option<f64>,
    pub dense_c: f64,
    pub max_retries: usize,
}

impl Default for StrategyOptions {
    fn default() -> Self {
        StrategyOptions {
            seed: 0,
            c: None,
            p: None,
            dense_c: 0.1,
            max_retries: DEFAULT_RETRIES,
        }
    }
}

fn measured_c(g: &Graph) -> f64 {
    if g.n() == 0 {
        0.0
    } else {
        g.min_degree() as f64 / g.n() as f64
    }
}

/// One single-edge path per edge. Always separating.
pub fn trivial_strategy(g: &Graph) -> StrategyOutcome {
    StrategyOutcome::finish(g, "trivial", singletons(g), BTreeMap::new())
}

/// Best verified result over all applicable strategies, with default options.
pub fn portfolio(g: &Graph, seed: u64) -> StrategyOutcome {
    portfolio_with(g, &StrategyOptions { seed, ..StrategyOptions::default() })
}

/// Runs every strategy, drops failures and unverified results, and keeps
/// the smallest system; ties go to the earlier strategy in [`StrategyKind::ALL`].
///
/// The min-degree strategy always runs at the measured `δ/n` here, so a
/// caller-supplied `c` only affects the dense strategy.
pub fn portfolio_with(g: &Graph, opts: &StrategyOptions) -> StrategyOutcome {
    let mut best: Option<StrategyOutcome> = None;
    let mut diagnostics = BTreeMap::new();
    let (mut tried, mut verified) = (0, 0);
    for kind in StrategyKind::ALL {
        let result = match kind {
            StrategyKind::Portfolio => continue,
            StrategyKind::MinDegree => kind.run(g, &StrategyOptions { c: None, ..opts.clone() }),
            StrategyKind::Dense => kind.run(g, &StrategyOptions { c: Some(opts.c.unwrap_or(opts.dense_c)), ..opts.clone() }),
            _ => kind.run(g, opts),
        };
        if matches!(result, Err(StrategyError::Precondition(_))) {
            continue;
        }
        tried += 1;
        let Ok(outcome) = result else { continue };
        if !outcome.verified {
            continue;
        }
        verified += 1;
        diagnostics.insert(format!("size_{}", kind.name()), outcome.size as i64);
        if best.as_ref().is_none_or(|b| outcome.size < b.size) {
            best = Some(outcome);
        }
    }
    let mut best = best.expect("the trivial strategy always verifies");
    diagnostics.insert("candidates_tried".into(), tried);
    diagnostics.insert("candidates_verified".into(), verified);
    best.diagnostics.extend(diagnostics);
    best
}
