use crate::generators::make_star;
use crate::graph::PathSystem;

use super::{at_least, ConstructionError};

/// Family of `⌊2(n-1)/3⌋` paths for the star of order `n` (center `0`).
///
/// Leaves go in consecutive triples `a, b, c`, each separated by the wedges
/// `a-0-b` and `b-0-c`. One leftover leaf stays uncovered; two leftovers
/// `d, e` get the single edge `d-0`.
pub fn separate_star(n: usize) -> Result<PathSystem, ConstructionError> {
    at_least(n, 4)?;
    let g = make_star(n).unwrap();
    let leaves: Vec<usize> = (1..n).collect();
    let mut seqs: Vec<Vec<usize>> = Vec::new();
    let mut triples = leaves.chunks_exact(3);
    for t in triples.by_ref() {
        seqs.push(vec![t[0], 0, t[1]]);
        seqs.push(vec![t[1], 0, t[2]]);
    }
    if let [d, _e] = triples.remainder() {
        seqs.push(vec![*d, 0]);
    }
    Ok(PathSystem::from_sequences(&g, &seqs).unwrap())
}
