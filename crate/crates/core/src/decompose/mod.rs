//! The two shared subroutines of every general strategy: a decomposition
//! into at most `n` edge-disjoint paths, and a decomposition into at most
//! `3n` matchings that each meet every one of those paths at most once.

mod matching;
mod paths;

use thiserror::Error;

pub use matching::{first_fit, matching_decompose, MatchingFamily, Slot};
pub use paths::path_decompose;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("path decomposition used {count} paths on {n} vertices")]
    TooManyPaths { count: usize, n: usize },
    #[error("not an edge-disjoint path decomposition: {0}")]
    NotADecomposition(String),
    #[error("edge {edge} does not fit into any of {cap} matchings")]
    TooManyMatchings { edge: usize, cap: usize },
}
