use std::collections::BTreeMap;

use crate::decompose::{matching_decompose, path_decompose};
use crate::graph::{Graph, Path, PathSystem, Vertex};

use super::alternating::{alternating_cover, expand_piece, split_alternating};
use super::common::CommonNeighborGraph;
use super::split::random_split;
use super::{ceil_at_least_one, check_fraction, StrategyError, StrategyOutcome};

/// What one direction of the min-degree strategy built, in host vertex ids.
#[derive(Debug, Clone)]
pub struct DirectionTrace {
    /// The side whose edges are being separated.
    pub blue: Graph,
    pub decomposition: PathSystem,
    /// Blue edges of each matching.
    pub matchings: Vec<Vec<(Vertex, Vertex)>>,
    /// Alternating paths of each matching, before cutting.
    pub alternating: Vec<Vec<Vec<Vertex>>>,
    pub pieces: usize,
}

#[derive(Debug, Clone)]
pub struct MinDegreeTrace {
    pub directions: Vec<DirectionTrace>,
}

/// Separating system for a graph with minimum degree at least `c·n`.
pub fn min_degree_strategy(g: &Graph, c: f64, seed: u64, max_retries: usize) -> Result<StrategyOutcome, StrategyError> {
    min_degree_trace(g, c, seed, max_retries).map(|(o, _)| o)
}

/// [`min_degree_strategy`] together with its intermediate structures.
pub fn min_degree_trace(g: &Graph, c: f64, seed: u64, max_retries: usize) -> Result<(StrategyOutcome, MinDegreeTrace), StrategyError> {
    check_fraction("c", c, false)?;
    let n = g.n();
    let nf = n as f64;
    if (g.min_degree() as f64) < c * nf - 1e-9 {
        return Err(StrategyError::Precondition(format!(
            "minimum degree {} is below c·n = {:.2}",
            g.min_degree(),
            c * nf
        )));
    }
    let split = random_split(g, (c * nf / 3.0).ceil() as usize, max_retries, seed)?;
    let threshold = ceil_at_least_one(c * c * nf / 24.0);
    let piece_len = ceil_at_least_one(c * c * nf / 48.0);

    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("split_attempts".to_string(), split.attempts as i64);
    diagnostics.insert("common_threshold".to_string(), threshold as i64);
    diagnostics.insert("piece_length".to_string(), piece_len as i64);

    let mut paths = Vec::new();
    let mut directions = Vec::new();
    for (side, (blue, red)) in [(&split.g1, &split.g2), (&split.g2, &split.g1)].into_iter().enumerate() {
        let trace = separate_side(g, blue, red, threshold, piece_len, &mut paths)?;
        let tag = |key: &str| format!("{key}_{}", side + 1);
        let per_matching: Vec<usize> = trace.alternating.iter().map(Vec::len).collect();
        diagnostics.insert(tag("decomposition_paths"), trace.decomposition.len() as i64);
        diagnostics.insert(tag("matchings"), trace.matchings.len() as i64);
        diagnostics.insert(tag("alternating_paths"), per_matching.iter().sum::<usize>() as i64);
        diagnostics.insert(tag("max_alternating_per_matching"), per_matching.iter().max().copied().unwrap_or(0) as i64);
        diagnostics.insert(tag("pieces"), trace.pieces as i64);
        directions.push(trace);
    }
    let system = PathSystem::new(paths).expect("members have positive length");
    let outcome = StrategyOutcome::finish(g, "min-degree", system, diagnostics);
    Ok((outcome, MinDegreeTrace { directions }))
}

/// Adds the paths separating the edges of `blue` (decomposition paths and
/// expanded alternating pieces) to `out`.
fn separate_side(
    g: &Graph,
    blue: &Graph,
    red: &Graph,
    threshold: usize,
    piece_len: usize,
    out: &mut Vec<Path>,
) -> Result<DirectionTrace, StrategyError> {
    let decomposition = path_decompose(blue).map_err(|e| StrategyError::failed("path-decomposition", e))?;
    let family = matching_decompose(blue, &decomposition).map_err(|e| StrategyError::failed("matching", e))?;
    for p in &decomposition {
        out.push(Path::from_vertices(g, p.vertices()).expect("side paths lie in the host"));
    }
    let aux = CommonNeighborGraph::new(red, threshold);
    let mut matchings = Vec::new();
    let mut alternating = Vec::new();
    let mut pieces = 0;
    for ids in &family.matchings {
        let pairs: Vec<(Vertex, Vertex)> = ids.iter().map(|&e| blue.edge(e)).collect();
        let cover = alternating_cover(&pairs, &aux);
        for q in &cover {
            for piece in split_alternating(q, piece_len) {
                let seq = expand_piece(&piece, red, |_, _| None, |v| v)?;
                out.push(Path::from_vertices(g, &seq).map_err(|e| StrategyError::failed("red-expansion", e))?);
                pieces += 1;
            }
        }
        matchings.push(pairs);
        alternating.push(cover);
    }
    Ok(DirectionTrace {
        blue: blue.clone(),
        decomposition,
        matchings,
        alternating,
        pieces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_path_graph};

    #[test]
    fn complete_graph() {
        let g = make_complete(8).unwrap();
        let o = min_degree_strategy(&g, 0.5, 1, 100).unwrap();
        assert!(o.verified);
        assert!(o.size <= 3904);
    }

    #[test]
    fn degree_precondition() {
        let g = make_path_graph(10).unwrap();
        assert!(matches!(
            min_degree_strategy(&g, 0.5, 0, 100),
            Err(StrategyError::Precondition(_))
        ));
        assert!(min_degree_strategy(&g, 0.0, 0, 100).is_err());
        assert!(min_degree_strategy(&g, 1.5, 0, 100).is_err());
    }

    #[test]
    fn long_pieces_use_red_edges() {
        // On K100 with c close to 1, pieces may hold two blue edges.
        let g = make_complete(100).unwrap();
        let (o, t) = min_degree_trace(&g, 0.99, 2, 100).unwrap();
        assert!(o.verified);
        assert_eq!(o.diagnostics["piece_length"], 3);
        assert!(t.directions.iter().all(|d| d.pieces < d.blue.m()));
    }
}
