//! Labeled graph families. Edge ids are assigned in lexicographic order.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("order parameter must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("edge probability must lie in [0, 1], got {0}")]
    Probability(f64),
}

fn at_least(n: usize, min: usize) -> Result<(), GenError> {
    if n < min {
        Err(GenError::TooSmall { n, min })
    } else {
        Ok(())
    }
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn make_path_graph(n: usize) -> Result<Graph, GenError> {
    at_least(n, 1)?;
    Ok(Graph::from_edge_set(n, (1..n).map(|i| (i - 1, i))).unwrap())
}

/// Star of order `n`: center `0` joined to leaves `1..n`.
pub fn make_star(n: usize) -> Result<Graph, GenError> {
    at_least(n, 1)?;
    Ok(Graph::from_edge_set(n, (1..n).map(|i| (0, i))).unwrap())
}

/// Id of comb vertex `(i, layer)`, `i < n`, `layer ∈ {0, 1, 2}`; layer 0 is the spine.
pub fn comb_vertex(n: usize, i: usize, layer: usize) -> Vertex {
    debug_assert!(i < n && layer < 3);
    layer * n + i
}

/// Hair comb of order `3n`: a spine path on `n` vertices with a pendant
/// path of length two hanging from each spine vertex.
pub fn make_hair_comb(n: usize) -> Result<Graph, GenError> {
    at_least(n, 1)?;
    let v = |i, layer| comb_vertex(n, i, layer);
    let spine = (1..n).map(|i| (v(i - 1, 0), v(i, 0)));
    let hairs = (0..n).flat_map(|i| [(v(i, 0), v(i, 1)), (v(i, 1), v(i, 2))]);
    Ok(Graph::from_edge_set(3 * n, spine.chain(hairs)).unwrap())
}

/// Id of ladder vertex at `column < n` on `rail ∈ {0, 1}` (0 = bottom).
pub fn ladder_vertex(n: usize, column: usize, rail: usize) -> Vertex {
    debug_assert!(column < n && rail < 2);
    rail * n + column
}

/// Ladder of order `2n`: two rails of `n` vertices joined by `n` rungs.
pub fn make_ladder(n: usize) -> Result<Graph, GenError> {
    at_least(n, 1)?;
    let v = |j, r| ladder_vertex(n, j, r);
    let rails = (1..n).flat_map(|j| [(v(j - 1, 0), v(j, 0)), (v(j - 1, 1), v(j, 1))]);
    let rungs = (0..n).map(|j| (v(j, 0), v(j, 1)));
    Ok(Graph::from_edge_set(2 * n, rails.chain(rungs)).unwrap())
}

pub fn make_complete(n: usize) -> Result<Graph, GenError> {
    at_least(n, 1)?;
    Ok(Graph::from_edge_set(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap())
}

/// Erdős–Rényi `G(n, p)` drawn from a ChaCha8 stream seeded with `seed`.
/// Pairs are visited in lexicographic order, so a seed fixes the graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, edges).unwrap())
}

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    at_least(n, 1)?;
    if n <= 2 {
        return make_path_graph(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(tree_from_prufer(n, &code))
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn tree_from_prufer(n: usize, code: &[Vertex]) -> Graph {
    assert_eq!(code.len() + 2, n, "a Prüfer sequence has length n - 2");
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut ready: BinaryHeap<Reverse<Vertex>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = ready.pop().expect("a leaf is always available");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            ready.push(Reverse(v));
        }
    }
    let Reverse(a) = ready.pop().unwrap();
    let Reverse(b) = ready.pop().unwrap();
    edges.push((a, b));
    Graph::from_edge_set(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let comb = make_hair_comb(2).unwrap();
        assert_eq!((comb.n(), comb.m()), (6, 5));
        let ladder = make_ladder(3).unwrap();
        assert_eq!((ladder.n(), ladder.m()), (6, 7));
        let star = make_star(4).unwrap();
        assert_eq!((star.n(), star.m(), star.degree(0)), (4, 3, 3));
        assert_eq!(make_path_graph(5).unwrap().m(), 4);
        assert_eq!(make_complete(5).unwrap().m(), 10);
        assert_eq!(make_hair_comb(6).unwrap().n(), 18);
        assert!(make_star(0).is_err());
    }

    #[test]
    fn generated_edges_are_lexicographic() {
        for g in [make_hair_comb(4).unwrap(), make_ladder(5).unwrap(), gnp(20, 0.4, 3).unwrap()] {
            let mut sorted = g.edges().to_vec();
            sorted.sort_unstable();
            assert_eq!(g.edges(), sorted.as_slice());
        }
    }

    #[test]
    fn gnp_is_seeded() {
        assert_eq!(gnp(30, 0.5, 1).unwrap(), gnp(30, 0.5, 1).unwrap());
        assert_ne!(gnp(30, 0.5, 1).unwrap(), gnp(30, 0.5, 2).unwrap());
        assert_eq!(gnp(10, 0.0, 1).unwrap().m(), 0);
        assert_eq!(gnp(10, 1.0, 1).unwrap().m(), 45);
        assert!(gnp(10, 1.5, 1).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        for n in 1..40 {
            for seed in 0..5 {
                assert!(random_tree(n, seed).unwrap().is_tree());
            }
        }
    }

    #[test]
    fn prufer_decoding() {
        // Classic example: code [3, 3, 3, 4] on 6 vertices.
        let t = tree_from_prufer(6, &[3, 3, 3, 4]);
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }
}
