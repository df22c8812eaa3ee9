//! Separating path systems of graphs.
//!
//! A family of paths *separates* a graph when, for every two distinct edges,
//! some path contains exactly one of them. Such a family is a probe plan for
//! finding a single broken link: send a message along each path, record
//! which ones fail, and look up the unique edge with that failure pattern.
//!
//! The crate builds, checks, minimizes and decodes these families:
//!
//! * [`graph`] holds graphs, paths and the text formats.
//! * [`verify`] decides separation, localizes faults and evaluates lower bounds.
//! * [`decompose`] splits graphs into few paths and path-respecting matchings.
//! * [`constructions`] gives explicit families for paths, stars, combs,
//!   ladders and arbitrary trees.
//! * [`strategies`] produces linear-size families for dense and random graphs.
//! * [`exact`] computes the true minimum on small graphs.
//! * [`generators`] and [`bench`] build test graphs and benchmark corpora.
//!
//! A guide with worked examples lives in the `book/` directory of the
//! repository; its code listings are compiled as doctests of this crate.

pub mod bench;
pub mod constructions;
pub mod decompose;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod strategies;
pub mod verify;

pub use graph::{Graph, Path, PathSystem};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/strategies.md")]
    mod strategies {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
}
