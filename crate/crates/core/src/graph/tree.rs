use std::collections::VecDeque;

use thiserror::Error;

use super::{Graph, Path, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("endpoints coincide at vertex {0}")]
    SameEndpoints(Vertex),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("tree has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },
}

/// The unique `u`-`v` path of a tree.
pub fn tree_path(t: &Graph, u: Vertex, v: Vertex) -> Result<Path, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    unique_path(t, u, v)
}

/// [`tree_path`] without re-checking that `t` is a tree.
pub(crate) fn unique_path(t: &Graph, u: Vertex, v: Vertex) -> Result<Path, TreeError> {
    for w in [u, v] {
        if w >= t.n() {
            return Err(TreeError::VertexOutOfRange(w));
        }
    }
    if u == v {
        return Err(TreeError::SameEndpoints(u));
    }
    let mut parent = vec![usize::MAX; t.n()];
    parent[v] = v;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        if x == u {
            break;
        }
        for y in t.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    // Walking parents from u lands on v, so the sequence is already u..v.
    let mut seq = vec![u];
    let mut x = u;
    while x != v {
        x = parent[x];
        seq.push(x);
    }
    Ok(Path::from_vertices(t, &seq).expect("parent walk follows tree edges"))
}

/// Degree-one vertices in increasing order.
pub fn leaves(t: &Graph) -> Vec<Vertex> {
    (0..t.n()).filter(|&v| t.degree(v) == 1).collect()
}
