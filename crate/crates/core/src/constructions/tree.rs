use std::collections::BTreeSet;

use crate::graph::{tree_path, Graph, Path, PathSystem, Vertex};

use super::{path_family_on, ConstructionError};

/// Family of at most `⌊2(n-1)/3⌋` paths for any tree on `n ≥ 4` vertices.
///
/// While the tree has a vertex `u` of degree at least 3, contract `u` with
/// its three smallest neighbours `v1 < v2 < v3` into `u` and remember the
/// wedges `v1-u-v2` and `v2-u-v3`. Once only a path remains, lay the path
/// family along it. Every remembered endpoint pair is lifted back to the
/// unique path between those two vertices in the original tree.
pub fn separate_tree(t: &Graph) -> Result<PathSystem, ConstructionError> {
    if !t.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    let n = t.n();
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n).map(|v| t.neighbors(v).collect()).collect();
    let mut alive: BTreeSet<Vertex> = (0..n).collect();
    let mut wedges: Vec<[(Vertex, Vertex); 2]> = Vec::new();

    while let Some(u) = alive.iter().copied().find(|&v| adj[v].len() >= 3) {
        let vs: Vec<Vertex> = adj[u].iter().copied().take(3).collect();
        wedges.push([(vs[0], vs[1]), (vs[1], vs[2])]);
        for &v in &vs {
            adj[u].remove(&v);
            for w in std::mem::take(&mut adj[v]) {
                if w != u {
                    adj[w].remove(&v);
                    adj[w].insert(u);
                    adj[u].insert(w);
                }
            }
            alive.remove(&v);
        }
    }

    let mut ends: Vec<(Vertex, Vertex)> = Vec::new();
    if alive.len() >= 3 {
        let order = walk_path(&adj, &alive);
        ends.extend(path_family_on(&order).iter().map(|s| (s[0], s[s.len() - 1])));
    }
    for pair in wedges.iter().rev() {
        ends.extend_from_slice(pair);
    }
    let paths: Vec<Path> = ends.into_iter().map(|(a, b)| tree_path(t, a, b).unwrap()).collect();
    Ok(PathSystem::new(paths).unwrap())
}

// Vertex order of a contracted tree that has become a path, from its smaller leaf.
fn walk_path(adj: &[BTreeSet<Vertex>], alive: &BTreeSet<Vertex>) -> Vec<Vertex> {
    let start = alive.iter().copied().find(|&v| adj[v].len() <= 1).unwrap();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), alive.len());
    order
}
