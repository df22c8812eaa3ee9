use thiserror::Error;

use crate::graph::{Graph, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("the bound needs at least one edge")]
    NoEdges,
    #[error("the bound needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
}

/// `⌈log₂ m⌉`: any separating family of an `m`-element set has at least
/// this many members.
pub fn info_lower_bound(m: usize) -> Result<usize, BoundError> {
    if m == 0 {
        return Err(BoundError::NoEdges);
    }
    Ok(m.next_power_of_two().trailing_zeros() as usize)
}

/// Smallest `k` for which a `k`-path separating family of `K_n` passes the
/// edge-counting test.
///
/// At most one edge is uncovered and at most `k` edges lie on a single
/// member, so every other edge lies on two or more, while each member has at
/// most `n - 1` edges: `k(n-1) ≥ 1 + k + 2(C(n,2) - k - 1)`. The inequality
/// is solved by scanning `k` upward rather than through its closed form.
pub fn complete_lower_bound(n: usize) -> Result<usize, BoundError> {
    if n < 2 {
        return Err(BoundError::TooFewVertices { n, min: 2 });
    }
    let n = n as i128;
    let pairs = n * (n - 1) / 2;
    let holds = |k: i128| k * (n - 1) >= 1 + k + 2 * (pairs - k - 1);
    let mut k = 0;
    while !holds(k) {
        k += 1;
    }
    Ok(k as usize)
}

/// `max(⌈(n+1)/3⌉, ⌈log₂(n-1)⌉)` for a tree on `n ≥ 4` vertices.
pub fn tree_lower_bound(t: &Graph) -> Result<usize, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    let n = t.n();
    if n < 4 {
        return Err(TreeError::TooSmall { n, min: 4 });
    }
    let leaves_bound = (n + 1).div_ceil(3);
    let info = info_lower_bound(n - 1).expect("a tree on four or more vertices has edges");
    Ok(leaves_bound.max(info))
}
