use std::collections::{HashMap, HashSet, VecDeque};

use crate::graph::{Graph, Vertex};

use super::common::{smallest_common_neighbor, CommonNeighborGraph};
use super::StrategyError;

/// Covers a matching with paths that alternate between matching ("blue")
/// edges and edges of `aux` ("red"), starting and ending blue.
///
/// Paths are grown greedily: take the first unused blue edge, then keep
/// appending a red edge followed by an unused blue edge at the back, then
/// at the front, never revisiting a vertex. Each blue edge lands in exactly
/// one path. A returned path `v0 v1 … v(2t-1)` has blue edges `v(2s) v(2s+1)`.
pub fn alternating_cover(matching: &[(Vertex, Vertex)], aux: &CommonNeighborGraph) -> Vec<Vec<Vertex>> {
    let mut partner: HashMap<Vertex, (Vertex, usize)> = HashMap::new();
    for (i, &(a, b)) in matching.iter().enumerate() {
        partner.insert(a, (b, i));
        partner.insert(b, (a, i));
    }
    let mut used = vec![false; matching.len()];
    let mut out = Vec::new();
    for (i, &(a, b)) in matching.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut path: VecDeque<Vertex> = VecDeque::from([a, b]);
        let mut on_path: HashSet<Vertex> = HashSet::from([a, b]);
        let step = |end: Vertex, on_path: &HashSet<Vertex>, used: &mut Vec<bool>| {
            let next = aux.neighbors(end).iter().find_map(|&y| {
                let &(z, j) = partner.get(&y)?;
                (!used[j] && !on_path.contains(&y) && !on_path.contains(&z)).then_some((y, z, j))
            });
            if let Some((_, _, j)) = next {
                used[j] = true;
            }
            next.map(|(y, z, _)| (y, z))
        };
        while let Some((y, z)) = step(*path.back().unwrap(), &on_path, &mut used) {
            path.extend([y, z]);
            on_path.extend([y, z]);
        }
        while let Some((y, z)) = step(*path.front().unwrap(), &on_path, &mut used) {
            path.push_front(y);
            path.push_front(z);
            on_path.extend([y, z]);
        }
        out.push(path.into());
    }
    out
}

/// Cuts an alternating path into pieces of at most `max_edges` edges,
/// only at red edges, so every piece again starts and ends blue.
pub fn split_alternating(path: &[Vertex], max_edges: usize) -> Vec<Vec<Vertex>> {
    let blues_per_piece = max_edges.max(1).div_ceil(2);
    path.chunks(2 * blues_per_piece).map(<[Vertex]>::to_vec).collect()
}

/// Turns an alternating piece into a vertex sequence of the host graph.
///
/// Blue edge `x y` becomes `x m y` when `mid(x, y)` names a middle vertex,
/// and stays `x y` otherwise. Red edge `x y` becomes `x z y` for the
/// smallest common neighbour `z` of `x` and `y` in `red_host` that is not
/// yet on the piece. Piece vertices and `z` are local to `red_host`; `lift`
/// maps them to host ids.
pub(crate) fn expand_piece(
    piece: &[Vertex],
    red_host: &Graph,
    mid: impl Fn(Vertex, Vertex) -> Option<Vertex>,
    lift: impl Fn(Vertex) -> Vertex,
) -> Result<Vec<Vertex>, StrategyError> {
    let mut taken: HashSet<Vertex> = piece.iter().copied().collect();
    let mut seq = Vec::with_capacity(piece.len() * 2);
    for (i, pair) in piece.windows(2).enumerate() {
        let (x, y) = (pair[0], pair[1]);
        seq.push(lift(x));
        if i % 2 == 0 {
            if let Some(m) = mid(x, y) {
                seq.push(m);
            }
        } else {
            let z = smallest_common_neighbor(red_host, x, y, |z| !taken.contains(&z))
                .ok_or_else(|| StrategyError::failed("red-expansion", format!("no unused common neighbour of {x} and {y}")))?;
            taken.insert(z);
            seq.push(lift(z));
        }
    }
    seq.push(lift(*piece.last().unwrap()));
    Ok(seq)
}
