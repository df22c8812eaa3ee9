//! Endpoint conditions every separating path system of a tree satisfies.
//!
//! A path through a leaf ends there, and a path that separates the two
//! edges at a degree-two vertex ends there. These give cheap necessary
//! conditions, which is also where the `(n + 1) / 3` lower bound for trees
//! comes from: each member has two endpoints to spend on leaves and
//! degree-two vertices.

use serde::Serialize;

use crate::graph::{Graph, PathSystem, TreeError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EndpointViolation {
    /// More than one leaf is the endpoint of no member.
    LeavesNotEndpoints(Vec<Vertex>),
    /// A degree-two vertex is the endpoint of no member.
    DegreeTwoNotEndpoint(Vertex),
    /// Member `path` joins two leaves and no member ends at exactly one of them.
    LeafPairUnsplit { path: usize, leaves: (Vertex, Vertex) },
}

/// Lists the necessary conditions `ps` violates on tree `t` (`n ≥ 3`).
pub fn tree_endpoint_violations(t: &Graph, ps: &PathSystem) -> Result<Vec<EndpointViolation>, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    if t.n() < 3 {
        return Err(TreeError::TooSmall { n: t.n(), min: 3 });
    }
    let mut endpoint_count = vec![0usize; t.n()];
    for p in ps {
        let (a, b) = p.endpoints();
        endpoint_count[a] += 1;
        endpoint_count[b] += 1;
    }
    let is_leaf = |v: Vertex| t.degree(v) == 1;

    let mut violations = Vec::new();
    let bare_leaves: Vec<Vertex> = (0..t.n()).filter(|&v| is_leaf(v) && endpoint_count[v] == 0).collect();
    if bare_leaves.len() > 1 {
        violations.push(EndpointViolation::LeavesNotEndpoints(bare_leaves));
    }
    for (v, &count) in endpoint_count.iter().enumerate() {
        if t.degree(v) == 2 && count == 0 {
            violations.push(EndpointViolation::DegreeTwoNotEndpoint(v));
        }
    }
    for (i, p) in ps.iter().enumerate() {
        let (u, v) = p.endpoints();
        if !(is_leaf(u) && is_leaf(v)) {
            continue;
        }
        let split = ps.iter().any(|q| {
            let (a, b) = q.endpoints();
            let ends_u = a == u || b == u;
            let ends_v = a == v || b == v;
            ends_u != ends_v
        });
        if !split {
            violations.push(EndpointViolation::LeafPairUnsplit {
                path: i,
                leaves: (u.min(v), u.max(v)),
            });
        }
    }
    Ok(violations)
}
