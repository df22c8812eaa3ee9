//! Simple undirected graphs with a stable edge numbering.
//!
//! Vertices are dense integers `0..n`. Every edge is stored once as a
//! canonical `(min, max)` pair and carries an index in `0..m`. Parsed graphs
//! keep the file order of their edges; generated graphs are numbered in
//! lexicographic order. Everything downstream (signatures, witnesses, edge
//! bitmasks) is keyed by that index, so it never changes after construction.

mod io;
mod multigraph;
mod path;
mod tree;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub use io::ParseError;
pub use multigraph::{ColoredEdge, ColoredMultigraph, MultigraphError};
pub use path::{Path, PathError, PathSystem};
pub use tree::{leaves, tree_path, TreeError};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
}

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

#[inline]
fn canonical(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph whose edge indices follow the order of `edges`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        };
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Builds a graph whose edge indices follow lexicographic order of the
    /// canonical pairs, regardless of the input order.
    pub fn from_edge_set<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list: Vec<(Vertex, Vertex)> = edges.into_iter().map(|(u, v)| canonical(u, v)).collect();
        list.sort_unstable();
        Graph::new(n, list)
    }

    /// A graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = canonical(u, v);
        if self.index.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.index.insert(key, id);
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` endpoints, indexed by edge id.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&canonical(u, v)).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.index.contains_key(&canonical(u, v))
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; `0` for the graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Connected and acyclic, with at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// The subgraph induced by `vertices`, relabeled to `0..vertices.len()`
    /// in the given order. Returns the graph and the local-to-host vertex map.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (a, b) = (local[u], local[v]);
            (a != usize::MAX && b != usize::MAX).then_some((a, b))
        });
        let sub = Graph::from_edge_set(vertices.len(), edges).expect("induced subgraph of a simple graph is simple");
        (sub, vertices.to_vec())
    }

    /// The spanning subgraph keeping only the listed edges, numbered in the
    /// order given.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Graph {
        Graph::new(self.n, ids.iter().map(|&e| self.edges[e])).expect("edge subset of a simple graph is simple")
    }

    pub fn density(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        2.0 * self.m() as f64 / (self.n as f64 * (self.n as f64 - 1.0))
    }
}
