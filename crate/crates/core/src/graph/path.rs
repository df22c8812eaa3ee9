use thiserror::Error;

use super::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("a path needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range at position {position}")]
    VertexOutOfRange { vertex: Vertex, position: usize },
    #[error("vertex {vertex} repeated at position {position}")]
    RepeatedVertex { vertex: Vertex, position: usize },
    #[error("missing edge {u}-{v} at position {position}")]
    MissingEdge { u: Vertex, v: Vertex, position: usize },
    #[error("path {index} has length zero")]
    ZeroLength { index: usize },
}

/// A simple path of a host graph.
///
/// The path does not borrow its host; it records the host's edge ids, and
/// every consumer that accepts a graph alongside a path re-validates it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

impl Path {
    /// Validates `vs` against `g`. A single vertex is accepted as a path of
    /// length zero; [`PathSystem`] rejects those.
    pub fn from_vertices(g: &Graph, vs: &[Vertex]) -> Result<Self, PathError> {
        if vs.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = vec![false; g.n()];
        for (position, &v) in vs.iter().enumerate() {
            if v >= g.n() {
                return Err(PathError::VertexOutOfRange { vertex: v, position });
            }
            if seen[v] {
                return Err(PathError::RepeatedVertex { vertex: v, position });
            }
            seen[v] = true;
        }
        let edges = vs
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                g.edge_id(w[0], w[1]).ok_or(PathError::MissingEdge {
                    u: w[0],
                    v: w[1],
                    position: i + 1,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Path {
            vertices: vs.to_vec(),
            edges,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edge ids in traversal order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        Path { vertices, edges }
    }

    /// Sorted edge ids; equal for a path and its reverse.
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut set = self.edges.clone();
        set.sort_unstable();
        set
    }
}

/// An ordered family of paths of length at least one over a single host.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathSystem {
    paths: Vec<Path>,
}

impl PathSystem {
    pub fn new(paths: Vec<Path>) -> Result<Self, PathError> {
        if let Some(index) = paths.iter().position(Path::is_empty) {
            return Err(PathError::ZeroLength { index });
        }
        Ok(PathSystem { paths })
    }

    /// Builds a system from raw vertex sequences.
    pub fn from_sequences<S: AsRef<[Vertex]>>(g: &Graph, seqs: &[S]) -> Result<Self, PathError> {
        let paths = seqs
            .iter()
            .map(|s| Path::from_vertices(g, s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        PathSystem::new(paths)
    }

    pub fn push(&mut self, path: Path) -> Result<(), PathError> {
        if path.is_empty() {
            return Err(PathError::ZeroLength { index: self.paths.len() });
        }
        self.paths.push(path);
        Ok(())
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Path> {
        self.paths.iter()
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    /// Re-validates every member against `g` and renumbers its edges with
    /// `g`'s edge ids.
    pub fn rebind(&self, g: &Graph) -> Result<PathSystem, PathError> {
        PathSystem::from_sequences(g, &self.paths.iter().map(Path::vertices).collect::<Vec<_>>())
    }

    /// Drops later members whose edge set repeats an earlier one. Identical
    /// members never separate anything the first copy does not.
    pub fn dedup_edge_sets(&mut self) -> usize {
        let mut seen = std::collections::HashSet::new();
        let before = self.paths.len();
        self.paths.retain(|p| seen.insert(p.edge_set()));
        before - self.paths.len()
    }
}

impl<'a> IntoIterator for &'a PathSystem {
    type Item = &'a Path;
    type IntoIter = std::slice::Iter<'a, Path>;

    fn into_iter(self) -> Self::IntoIter {
        self.paths.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn valid_path() {
        let p = Path::from_vertices(&p3(), &[0, 1, 2]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.edges(), &[0, 1]);
        assert_eq!(p.endpoints(), (0, 2));
    }

    #[test]
    fn missing_edge_is_reported_with_position() {
        assert_eq!(
            Path::from_vertices(&p3(), &[0, 2]),
            Err(PathError::MissingEdge { u: 0, v: 2, position: 1 })
        );
    }

    #[test]
    fn repeated_vertex_is_rejected() {
        let triangle = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            Path::from_vertices(&triangle, &[0, 1, 2, 0]),
            Err(PathError::RepeatedVertex { vertex: 0, position: 3 })
        );
    }

    #[test]
    fn zero_length_members_are_rejected() {
        let g = p3();
        let single = Path::from_vertices(&g, &[1]).unwrap();
        assert!(single.is_empty());
        assert_eq!(
            PathSystem::new(vec![Path::from_vertices(&g, &[0, 1]).unwrap(), single]),
            Err(PathError::ZeroLength { index: 1 })
        );
    }

    #[test]
    fn dedup_removes_reversed_copies() {
        let g = p3();
        let mut ps = PathSystem::from_sequences(&g, &[vec![0, 1, 2], vec![2, 1, 0], vec![1, 2]]).unwrap();
        assert_eq!(ps.dedup_edge_sets(), 1);
        assert_eq!(ps.len(), 2);
    }
}
