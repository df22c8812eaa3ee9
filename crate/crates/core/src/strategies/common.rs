use crate::graph::{Graph, Vertex};

/// Graph on the vertices of a host joining pairs with many common neighbours.
#[derive(Debug, Clone)]
pub struct CommonNeighborGraph {
    threshold: usize,
    adj: Vec<Vec<Vertex>>,
}

impl CommonNeighborGraph {
    /// Joins `x` and `y` when they have at least `threshold` common
    /// neighbours in `host`.
    pub fn new(host: &Graph, threshold: usize) -> Self {
        let n = host.n();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for (u, v) in host.edges().iter().copied() {
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        let row = |x: usize| &bits[x * words..(x + 1) * words];
        let mut adj = vec![Vec::new(); n];
        for x in 0..n {
            for y in x + 1..n {
                let common: u32 = row(x).iter().zip(row(y)).map(|(a, b)| (a & b).count_ones()).sum();
                if common as usize >= threshold {
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        CommonNeighborGraph { threshold, adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// Neighbours in increasing order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.adj[x].binary_search(&y).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// A graph with no edges on `n` vertices.
    pub fn empty(n: usize) -> Self {
        CommonNeighborGraph {
            threshold: usize::MAX,
            adj: vec![Vec::new(); n],
        }
    }
}

/// Smallest common neighbour of `x` and `y` in `host` accepted by `free`.
pub(crate) fn smallest_common_neighbor(host: &Graph, x: Vertex, y: Vertex, free: impl Fn(Vertex) -> bool) -> Option<Vertex> {
    host.neighbors(x).find(|&z| z != y && free(z) && host.has_edge(z, y))
}
