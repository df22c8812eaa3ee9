use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::decompose::{matching_decompose, path_decompose};
use crate::graph::{Graph, Path, PathSystem, Vertex};

use super::split::random_split;
use super::{check_fraction, StrategyError, StrategyOutcome};

/// Separating system aimed at random graphs of edge probability `p`.
///
/// Sparse graphs (`m ≤ 20n`) get one path per edge. Otherwise the edges
/// are split at random, each side is decomposed into path-respecting
/// matchings, matchings are cut into groups of at most `max(1, ⌊np/20⌋)`
/// edges, and every group is chained into one path through shortest
/// connectors in the other side that avoid vertices already used.
pub fn random_graph_strategy(g: &Graph, p: f64, seed: u64, max_retries: usize) -> Result<StrategyOutcome, StrategyError> {
    check_fraction("p", p, true)?;
    let n = g.n();
    let mut diagnostics = BTreeMap::new();
    if g.m() <= 20 * n {
        diagnostics.insert("sparse_case".to_string(), 1);
        return Ok(StrategyOutcome::finish(g, "random", singletons(g), diagnostics));
    }
    diagnostics.insert("sparse_case".to_string(), 0);
    let split = random_split(g, 0, max_retries, seed)?;
    let group = ((n as f64 * p / 20.0).floor() as usize).max(1);
    diagnostics.insert("group_size".to_string(), group as i64);
    let mut paths = Vec::new();
    for (side, (blue, link)) in [(&split.g1, &split.g2), (&split.g2, &split.g1)].into_iter().enumerate() {
        let decomposition = path_decompose(blue).map_err(|e| StrategyError::failed("path-decomposition", e))?;
        let family = matching_decompose(blue, &decomposition).map_err(|e| StrategyError::failed("matching", e))?;
        for q in &decomposition {
            paths.push(Path::from_vertices(g, q.vertices()).unwrap());
        }
        let mut groups = 0;
        for m in &family.matchings {
            for chunk in m.chunks(group) {
                let pairs: Vec<(Vertex, Vertex)> = chunk.iter().map(|&e| blue.edge(e)).collect();
                let seq = link_matching(&pairs, link)?;
                paths.push(Path::from_vertices(g, &seq).map_err(|e| StrategyError::failed("linking", e))?);
                groups += 1;
            }
        }
        diagnostics.insert(format!("matchings_{}", side + 1), family.len() as i64);
        diagnostics.insert(format!("groups_{}", side + 1), groups);
    }
    let system = PathSystem::new(paths).expect("members have positive length");
    Ok(StrategyOutcome::finish(g, "random", system, diagnostics))
}

pub(crate) fn singletons(g: &Graph) -> PathSystem {
    let paths = g.edges().iter().map(|&(u, v)| Path::from_vertices(g, &[u, v]).unwrap()).collect();
    PathSystem::new(paths).unwrap()
}

/// Chains the matching edges into one path, joining consecutive edges by
/// shortest paths in `link` through unused vertices.
fn link_matching(pairs: &[(Vertex, Vertex)], link: &Graph) -> Result<Vec<Vertex>, StrategyError> {
    let mut other: HashMap<Vertex, Vertex> = HashMap::new();
    for &(a, b) in &pairs[1..] {
        other.insert(a, b);
        other.insert(b, a);
    }
    let mut seq = vec![pairs[0].0, pairs[0].1];
    let mut used: HashSet<Vertex> = seq.iter().copied().collect();
    while !other.is_empty() {
        let found = match connector(link, *seq.last().unwrap(), &used, &other) {
            Some(route) => Some(route),
            None => {
                seq.reverse();
                connector(link, *seq.last().unwrap(), &used, &other)
            }
        };
        let route = found.ok_or_else(|| {
            StrategyError::failed("linking", format!("{} matching edges could not be reached", other.len() / 2))
        })?;
        let target = *route.last().unwrap();
        let mate = other[&target];
        other.remove(&target);
        other.remove(&mate);
        for v in route.into_iter().chain([mate]) {
            used.insert(v);
            seq.push(v);
        }
    }
    Ok(seq)
}

/// Shortest path in `link` from `start` (excluded) to the nearest vertex of
/// `targets`, with every vertex on it unused.
fn connector(link: &Graph, start: Vertex, used: &HashSet<Vertex>, targets: &HashMap<Vertex, Vertex>) -> Option<Vec<Vertex>> {
    let mut parent: HashMap<Vertex, Vertex> = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for y in link.neighbors(x) {
            if used.contains(&y) || parent.contains_key(&y) {
                continue;
            }
            parent.insert(y, x);
            if targets.contains_key(&y) {
                let mut route = vec![y];
                let mut cur = x;
                while cur != start {
                    route.push(cur);
                    cur = parent[&cur];
                }
                route.reverse();
                return Some(route);
            }
            queue.push_back(y);
        }
    }
    None
}
