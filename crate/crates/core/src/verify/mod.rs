//! Separation checking and single-fault localization.
//!
//! The *signature* of an edge is the set of family members that contain it.
//! A family separates the edges of a graph exactly when all signatures are
//! distinct. Read as probes, a signature is the set of probe paths that fail
//! when that edge is down, so a separating family localizes any single
//! faulty link by table lookup.

mod bounds;
mod endpoints;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, PathError, PathSystem};

pub use bounds::{complete_lower_bound, info_lower_bound, tree_lower_bound, BoundError};
pub use endpoints::{tree_endpoint_violations, EndpointViolation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub separating: bool,
    /// Lexicographically smallest pair of edge ids with equal signatures.
    pub witness: Option<(EdgeId, EdgeId)>,
    /// Edges that no member covers.
    pub uncovered: Vec<EdgeId>,
    /// For each edge id, the increasing list of member indices containing it.
    pub signatures: Vec<Vec<usize>>,
}

impl SeparationReport {
    pub fn covered(&self) -> usize {
        self.signatures.len() - self.uncovered.len()
    }
}

/// Checks whether `ps` separates the edges of `g`.
pub fn verify(g: &Graph, ps: &PathSystem) -> Result<SeparationReport, PathError> {
    let ps = ps.rebind(g)?;
    let mut signatures = vec![Vec::new(); g.m()];
    for (i, p) in ps.iter().enumerate() {
        for &e in p.edges() {
            signatures[e].push(i);
        }
    }
    let uncovered = (0..g.m()).filter(|&e| signatures[e].is_empty()).collect();

    let mut first_with: HashMap<&[usize], EdgeId> = HashMap::with_capacity(g.m());
    let mut witness: Option<(EdgeId, EdgeId)> = None;
    for (e, sig) in signatures.iter().enumerate() {
        match first_with.get(sig.as_slice()) {
            // Edges are scanned in increasing order, so the first repeat
            // found has the smallest possible second element for its class,
            // and the class with the smallest first element wins.
            Some(&f) => {
                if witness.is_none_or(|w| (f, e) < w) {
                    witness = Some((f, e));
                }
            }
            None => {
                first_with.insert(sig, e);
            }
        }
    }
    Ok(SeparationReport {
        separating: witness.is_none(),
        witness,
        uncovered,
        signatures,
    })
}

/// Indices of the members of `ps` that contain edge `e`.
///
/// Panics if `e` is not an edge id of `g`.
pub fn signature(g: &Graph, ps: &PathSystem, e: EdgeId) -> Vec<usize> {
    let (u, v) = g.edge(e);
    ps.iter()
        .enumerate()
        .filter(|(_, p)| {
            p.vertices()
                .windows(2)
                .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
        })
        .map(|(i, _)| i)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error(transparent)]
    InvalidPath(#[from] PathError),
    #[error("the path system does not separate the graph; edges {0} and {1} are indistinguishable")]
    NotSeparating(EdgeId, EdgeId),
    #[error("no edge produces the failure set {0:?}")]
    NoMatch(Vec<usize>),
    #[error("every probe passed but every edge is covered")]
    AllCovered,
}

/// Recovers the faulty edge from the set of failed probe indices.
///
/// An empty outcome names the single uncovered edge, if there is one.
pub fn decode(g: &Graph, ps: &PathSystem, outcome: &[usize]) -> Result<EdgeId, DecodeError> {
    let report = verify(g, ps)?;
    if let Some((a, b)) = report.witness {
        return Err(DecodeError::NotSeparating(a, b));
    }
    let mut key = outcome.to_vec();
    key.sort_unstable();
    key.dedup();
    if key.is_empty() {
        return report.uncovered.first().copied().ok_or(DecodeError::AllCovered);
    }
    report
        .signatures
        .iter()
        .position(|sig| *sig == key)
        .ok_or(DecodeError::NoMatch(key))
}
