//! Edge-disjoint path decompositions with at most `n` members.

use std::collections::{BTreeSet, HashSet};

use crate::graph::{Graph, PathSystem, Vertex};

use super::DecomposeError;

/// Splits `g` into edge-disjoint paths covering every edge, with at most
/// `n` paths.
///
/// The primary method repeatedly grows a maximal path from a vertex of
/// smallest remaining degree and then splices paths that meet end to end.
/// If that ever exceeds `n` paths, an Euler-trail based cover is tried and
/// the smaller of the two is kept. Exceeding `n` with both is an error.
pub fn path_decompose(g: &Graph) -> Result<PathSystem, DecomposeError> {
    let greedy = merge_at_endpoints(greedy_maximal_paths(g));
    let seqs = if greedy.len() <= g.n() {
        greedy
    } else {
        let trails = merge_at_endpoints(euler_split_paths(g));
        if trails.len() < greedy.len() {
            trails
        } else {
            greedy
        }
    };
    if seqs.len() > g.n().max(1) && g.m() > 0 {
        return Err(DecomposeError::TooManyPaths {
            count: seqs.len(),
            n: g.n(),
        });
    }
    Ok(PathSystem::from_sequences(g, &seqs).expect("decomposition paths are paths of g"))
}

struct Remaining {
    adj: Vec<BTreeSet<Vertex>>,
}

impl Remaining {
    fn new(g: &Graph) -> Self {
        Remaining {
            adj: (0..g.n()).map(|v| g.neighbors(v).collect()).collect(),
        }
    }

    fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    fn remove(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }
}

fn greedy_maximal_paths(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut rem = Remaining::new(g);
    let mut on_path = vec![false; g.n()];
    let mut out = Vec::new();
    loop {
        let start = (0..g.n())
            .filter(|&v| rem.degree(v) > 0)
            .min_by_key(|&v| (rem.degree(v), v));
        let Some(start) = start else { break };
        let mut path = vec![start];
        on_path[start] = true;
        extend_back(&mut path, &mut on_path, &mut rem);
        path.reverse();
        extend_back(&mut path, &mut on_path, &mut rem);
        for &v in &path {
            on_path[v] = false;
        }
        out.push(path);
    }
    out
}

/// Grows `path` at its last vertex until stuck. A stuck end `x` with a free
/// edge to an earlier path vertex `path[i]` is rotated: the path becomes
/// `path[..=i] + reverse(path[i+1..])`, trading edge `path[i]path[i+1]` for
/// `path[i]x`. A rotation is taken only if the new end can then grow, so the
/// path gets longer with every rotation and the loop terminates.
fn extend_back(path: &mut Vec<Vertex>, on_path: &mut [bool], rem: &mut Remaining) {
    let free_step = |rem: &Remaining, on_path: &[bool], end: Vertex| {
        rem.adj[end]
            .iter()
            .copied()
            .filter(|&w| !on_path[w])
            .min_by_key(|&w| (rem.degree(w), w))
    };
    loop {
        let end = *path.last().unwrap();
        if let Some(w) = free_step(rem, on_path, end) {
            rem.remove(end, w);
            on_path[w] = true;
            path.push(w);
            continue;
        }
        let k = path.len() - 1;
        let pivot = (0..k.saturating_sub(1)).find(|&i| {
            let a = path[i];
            let b = path[i + 1];
            rem.adj[end].contains(&a) && rem.adj[b].iter().any(|&w| !on_path[w])
        });
        let Some(i) = pivot else { return };
        let (a, b) = (path[i], path[i + 1]);
        rem.remove(end, a);
        rem.adj[a].insert(b);
        rem.adj[b].insert(a);
        path[i + 1..].reverse();
    }
}

/// Euler-trail cover: odd vertices are paired through a virtual hub, each
/// component is walked once, the walk is cut at hub visits into trails, and
/// trails are cut into paths wherever a vertex would repeat.
fn euler_split_paths(g: &Graph) -> Vec<Vec<Vertex>> {
    let hub = g.n();
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); g.n() + 1];
    let mut edge_count = 0;
    for &(u, v) in g.edges() {
        adj[u].push((v, edge_count));
        adj[v].push((u, edge_count));
        edge_count += 1;
    }
    for v in 0..g.n() {
        if g.degree(v) % 2 == 1 {
            adj[v].push((hub, edge_count));
            adj[hub].push((v, edge_count));
            edge_count += 1;
        }
    }
    let mut used = vec![false; edge_count];
    let mut ptr = vec![0usize; g.n() + 1];
    let mut out = Vec::new();
    // Start with the hub so that all odd vertices are walked together.
    let starts = std::iter::once(hub).chain(0..g.n());
    for s in starts {
        if adj[s].iter().all(|&(_, e)| used[e]) {
            continue;
        }
        // Hierholzer's algorithm.
        let mut stack = vec![s];
        let mut circuit = Vec::new();
        while let Some(&v) = stack.last() {
            while ptr[v] < adj[v].len() && used[adj[v][ptr[v]].1] {
                ptr[v] += 1;
            }
            if ptr[v] == adj[v].len() {
                circuit.push(stack.pop().unwrap());
            } else {
                let (w, e) = adj[v][ptr[v]];
                used[e] = true;
                stack.push(w);
            }
        }
        for trail in circuit.split(|&v| v == hub) {
            split_into_paths(trail, &mut out);
        }
    }
    out
}

fn split_into_paths(trail: &[Vertex], out: &mut Vec<Vec<Vertex>>) {
    if trail.len() < 2 {
        return;
    }
    let mut cur: Vec<Vertex> = vec![trail[0]];
    let mut seen: HashSet<Vertex> = HashSet::from([trail[0]]);
    for &v in &trail[1..] {
        if seen.contains(&v) {
            let last = *cur.last().unwrap();
            out.push(std::mem::take(&mut cur));
            seen.clear();
            cur.push(last);
            seen.insert(last);
        }
        cur.push(v);
        seen.insert(v);
    }
    if cur.len() >= 2 {
        out.push(cur);
    }
}

/// Joins pairs of paths that share an endpoint and nothing else.
fn merge_at_endpoints(mut paths: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    loop {
        let mut merged = false;
        'outer: for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                if let Some(joined) = splice(&paths[i], &paths[j]) {
                    paths[i] = joined;
                    paths.remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            return paths;
        }
    }
}

fn splice(a: &[Vertex], b: &[Vertex]) -> Option<Vec<Vertex>> {
    let (a0, a1) = (a[0], *a.last().unwrap());
    let (b0, b1) = (b[0], *b.last().unwrap());
    let (left, right): (Vec<Vertex>, Vec<Vertex>) = if a1 == b0 {
        (a.to_vec(), b.to_vec())
    } else if a1 == b1 {
        (a.to_vec(), b.iter().rev().copied().collect())
    } else if a0 == b1 {
        (b.to_vec(), a.to_vec())
    } else if a0 == b0 {
        (a.iter().rev().copied().collect(), b.to_vec())
    } else {
        return None;
    };
    let joint: HashSet<Vertex> = left.iter().copied().collect();
    if right[1..].iter().any(|v| joint.contains(v)) {
        return None;
    }
    let mut out = left;
    out.extend_from_slice(&right[1..]);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gnp, make_complete, make_path_graph, make_star};

    fn check(g: &Graph, ps: &PathSystem) {
        let mut hits = vec![0; g.m()];
        for p in ps {
            for &e in p.edges() {
                hits[e] += 1;
            }
        }
        assert!(hits.iter().all(|&h| h == 1), "not a decomposition");
        assert!(ps.len() <= g.n());
    }

    #[test]
    fn path_is_its_own_decomposition() {
        let g = make_path_graph(5).unwrap();
        let ps = path_decompose(&g).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps.paths()[0].len(), 4);
    }

    #[test]
    fn triangle() {
        let g = make_complete(3).unwrap();
        let ps = path_decompose(&g).unwrap();
        check(&g, &ps);
        assert_eq!(ps.len(), 2);
    }

    #[test]
    fn star_pairs_leaves() {
        let g = make_star(6).unwrap();
        let ps = path_decompose(&g).unwrap();
        check(&g, &ps);
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(|p| p.vertices().contains(&0)));
    }

    #[test]
    fn empty_graph() {
        assert!(path_decompose(&Graph::empty(4)).unwrap().is_empty());
        assert!(path_decompose(&Graph::empty(0)).unwrap().is_empty());
    }

    #[test]
    fn euler_fallback_is_a_decomposition() {
        for seed in 0..20 {
            let g = gnp(30, 0.3, seed).unwrap();
            let seqs = euler_split_paths(&g);
            let ps = PathSystem::from_sequences(&g, &seqs).unwrap();
            let mut hits = vec![0; g.m()];
            for p in &ps {
                for &e in p.edges() {
                    hits[e] += 1;
                }
            }
            assert!(hits.iter().all(|&h| h == 1));
        }
    }

    #[test]
    fn complete_graphs_stay_within_bound() {
        for n in 2..40 {
            let g = make_complete(n).unwrap();
            check(&g, &path_decompose(&g).unwrap());
        }
    }
}
