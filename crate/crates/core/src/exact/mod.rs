//! Exact minimum separating path systems for small graphs.
//!
//! The solver lists every path, then searches for the smallest family
//! that splits every edge class, deepening the target size one step at a
//! time from the information bound. Each node branches on the first pair
//! of edges not yet told apart, over the paths containing exactly one of
//! them; earlier siblings are excluded from later subtrees so no family
//! is examined twice.

mod catalog;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, PathSystem};
use crate::verify::info_lower_bound;

pub use catalog::{enumerate_paths, PathCatalog};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("path catalog exceeds the cap of {cap} paths")]
    CatalogOverflow { cap: usize },
    #[error("exact search supports at most 128 edges, graph has {m}")]
    TooManyEdges { m: usize },
    #[error("catalog cap must be at least 1")]
    ZeroCap,
}

/// Work limits for [`exact_min`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactCaps {
    pub catalog: usize,
    pub nodes: u64,
}

impl Default for ExactCaps {
    fn default() -> Self {
        ExactCaps {
            catalog: 50_000,
            nodes: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactResult {
    pub value: usize,
    #[serde(serialize_with = "as_sequences")]
    pub witness: PathSystem,
    pub nodes_explored: u64,
    /// False when the node budget ran out; `value` is then only an upper bound.
    pub proved_optimal: bool,
}

fn as_sequences<S: Serializer>(ps: &PathSystem, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.vertices()))
}

/// Smallest separating path system of `g`.
pub fn exact_min(g: &Graph, caps: ExactCaps) -> Result<ExactResult, ExactError> {
    let catalog = enumerate_paths(g, caps.catalog)?;
    let m = g.m();
    let all: u128 = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    let start: Vec<u128> = if m >= 2 { vec![all] } else { Vec::new() };

    let incumbent = greedy(catalog.masks(), &start);
    let mut search = Search {
        masks: catalog.masks(),
        forbidden: vec![false; catalog.len()],
        chosen: Vec::new(),
        nodes: 0,
        cap: caps.nodes,
    };
    let mut best = incumbent;
    let mut proved = true;
    for k in info_lower_bound(m).unwrap_or(0)..best.len() {
        match search.run(&start, k) {
            Step::Found => {
                best = search.chosen.clone();
                break;
            }
            Step::Exhausted => {}
            Step::OutOfBudget => {
                proved = false;
                break;
            }
        }
    }
    let witness = PathSystem::new(best.iter().map(|&i| catalog.path(g, i)).collect()).unwrap();
    Ok(ExactResult {
        value: witness.len(),
        witness,
        nodes_explored: search.nodes,
        proved_optimal: proved,
    })
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    masks: &'a [u128],
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    nodes: u64,
    cap: u64,
}

impl Search<'_> {
    fn run(&mut self, classes: &[u128], budget: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Step::OutOfBudget;
        }
        let Some((a, b)) = first_pair(classes) else {
            return Step::Found;
        };
        if budget == 0 || !could_finish(classes, budget) {
            return Step::Exhausted;
        }
        let (bit_a, bit_b) = (1u128 << a, 1u128 << b);
        let mut candidates: Vec<(u64, usize)> = self
            .masks
            .iter()
            .enumerate()
            .filter(|&(i, &p)| !self.forbidden[i] && ((p & bit_a != 0) != (p & bit_b != 0)))
            .map(|(i, &p)| (resolved(classes, p), i))
            .collect();
        candidates.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

        let mut excluded = Vec::new();
        let mut result = Step::Exhausted;
        for (_, i) in candidates {
            self.chosen.push(i);
            match self.run(&refine(classes, self.masks[i]), budget - 1) {
                Step::Exhausted => {}
                other => {
                    result = other;
                    if matches!(result, Step::OutOfBudget) {
                        self.chosen.pop();
                    }
                    break;
                }
            }
            self.chosen.pop();
            self.forbidden[i] = true;
            excluded.push(i);
        }
        for i in excluded {
            self.forbidden[i] = false;
        }
        result
    }
}

/// Classes of edges with equal signatures so far; singletons are dropped.
fn refine(classes: &[u128], p: u128) -> Vec<u128> {
    let mut out = Vec::with_capacity(classes.len() + 1);
    for &c in classes {
        for part in [c & p, c & !p] {
            if part.count_ones() >= 2 {
                out.push(part);
            }
        }
    }
    out
}

/// Lexicographically first pair of edges sharing a class.
fn first_pair(classes: &[u128]) -> Option<(u32, u32)> {
    classes
        .iter()
        .filter(|c| c.count_ones() >= 2)
        .map(|&c| {
            let a = c.trailing_zeros();
            (a, (c & !(1u128 << a)).trailing_zeros())
        })
        .min()
}

fn pairs(s: u64) -> u64 {
    s * s.saturating_sub(1) / 2
}

/// Number of same-class pairs that path `p` splits.
fn resolved(classes: &[u128], p: u128) -> u64 {
    classes
        .iter()
        .map(|&c| (c & p).count_ones() as u64 * (c & !p).count_ones() as u64)
        .sum()
}

/// Lower-bound test: a class of size `s` needs `⌈log₂ s⌉` more paths, and
/// no path splits more than `Σ ⌊s²/4⌋` pairs.
fn could_finish(classes: &[u128], budget: usize) -> bool {
    let mut open = 0u64;
    let mut per_path = 0u64;
    for &c in classes {
        let s = c.count_ones() as u64;
        if (s as usize).next_power_of_two().trailing_zeros() as usize > budget {
            return false;
        }
        open += pairs(s);
        per_path += s * s / 4;
    }
    open <= per_path * budget as u64
}

/// Repeatedly takes the path splitting the most pairs.
fn greedy(masks: &[u128], start: &[u128]) -> Vec<usize> {
    let mut classes = start.to_vec();
    let mut chosen = Vec::new();
    while !classes.is_empty() {
        let (_, i) = masks
            .iter()
            .enumerate()
            .map(|(i, &p)| (resolved(&classes, p), std::cmp::Reverse(i)))
            .max()
            .map(|(s, std::cmp::Reverse(i))| (s, i))
            .expect("single-edge paths split every pair");
        classes = refine(&classes, masks[i]);
        chosen.push(i);
    }
    chosen
}
