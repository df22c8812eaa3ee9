//! Explicit separating path systems for named families and for trees.
//!
//! | family            | size                      | optimal |
//! |-------------------|---------------------------|---------|
//! | path `Pₙ`         | `⌊n/2⌋`                   | yes     |
//! | star of order `n` | `⌊2(n-1)/3⌋`              | yes     |
//! | hair comb `HCₙ`   | `n + 1`                   | yes     |
//! | ladder `Lₙ`       | `≤ 2⌈log₂ n⌉ + 3`         | up to a constant factor |
//! | any tree          | `≤ ⌊2(n-1)/3⌋`            | worst case over trees   |

mod comb;
mod ladder;
mod path;
mod star;
mod tree;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use comb::separate_hair_comb;
pub use ladder::{separate_ladder, LadderSubsetPath};
pub use path::{path_family_on, separate_path_graph};
pub use star::separate_star;
pub use tree::separate_tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("order parameter must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid ladder subset: {0}")]
    BadSubset(String),
}

pub(crate) fn at_least(n: usize, min: usize) -> Result<(), ConstructionError> {
    if n < min {
        Err(ConstructionError::TooSmall { n, min })
    } else {
        Ok(())
    }
}

/// True if `g` has exactly the edges of `reference` (edge order ignored).
pub fn same_labeled_graph(g: &Graph, reference: &Graph) -> bool {
    if g.n() != reference.n() || g.m() != reference.m() {
        return false;
    }
    let mut a: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let mut b: Vec<(Vertex, Vertex)> = reference.edges().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}
