//! Matchings that meet every path of a decomposition at most once.

use std::collections::HashSet;

use crate::graph::{EdgeId, Graph, PathSystem, Vertex};

use super::DecomposeError;

/// A bin in a first-fit partition.
pub trait Slot<T> {
    fn admits(&self, item: &T) -> bool;
    fn insert(&mut self, item: T);
}

/// Places each item into the first slot that admits it, opening a new slot
/// when none does. Returns the index of the item that would open slot
/// number `cap + 1`, if a cap is given and reached.
pub fn first_fit<T, S, F>(items: impl IntoIterator<Item = T>, mut open: F, cap: Option<usize>) -> Result<Vec<S>, usize>
where
    S: Slot<T>,
    F: FnMut() -> S,
{
    let mut slots: Vec<S> = Vec::new();
    for (i, item) in items.into_iter().enumerate() {
        match slots.iter_mut().find(|s| s.admits(&item)) {
            Some(slot) => slot.insert(item),
            None => {
                if cap.is_some_and(|c| slots.len() >= c) {
                    return Err(i);
                }
                let mut slot = open();
                debug_assert!(slot.admits(&item), "a fresh slot must admit any item");
                slot.insert(item);
                slots.push(slot);
            }
        }
    }
    Ok(slots)
}

/// A decomposition of an edge set into matchings, each containing at most
/// one edge of any origin path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingFamily {
    /// Edge ids of each matching, in insertion order.
    pub matchings: Vec<Vec<EdgeId>>,
    /// For each edge id, the index of the decomposition path containing it.
    pub origin: Vec<usize>,
}

impl MatchingFamily {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }
}

struct MatchingSlot {
    covered: Vec<bool>,
    origins: HashSet<usize>,
    edges: Vec<EdgeId>,
}

struct Candidate {
    edge: EdgeId,
    ends: (Vertex, Vertex),
    origin: usize,
}

impl Slot<Candidate> for MatchingSlot {
    fn admits(&self, c: &Candidate) -> bool {
        !self.covered[c.ends.0] && !self.covered[c.ends.1] && !self.origins.contains(&c.origin)
    }

    fn insert(&mut self, c: Candidate) {
        self.covered[c.ends.0] = true;
        self.covered[c.ends.1] = true;
        self.origins.insert(c.origin);
        self.edges.push(c.edge);
    }
}

/// Splits the edges of `g1` into at most `3n` matchings such that no
/// matching holds two edges of the same member of `paths`.
///
/// Edges are inserted in id order, each into the first matching that holds
/// no edge touching it and no edge of its path. At most `n - 2` edges share
/// its path and at most `2n - 4` touch it, so one of `3n` slots is free.
pub fn matching_decompose(g1: &Graph, paths: &PathSystem) -> Result<MatchingFamily, DecomposeError> {
    let paths = paths
        .rebind(g1)
        .map_err(|e| DecomposeError::NotADecomposition(e.to_string()))?;
    let mut origin = vec![usize::MAX; g1.m()];
    for (j, p) in paths.iter().enumerate() {
        for &e in p.edges() {
            if origin[e] != usize::MAX {
                return Err(DecomposeError::NotADecomposition(format!(
                    "edge {e} lies on paths {} and {j}",
                    origin[e]
                )));
            }
            origin[e] = j;
        }
    }
    if let Some(e) = origin.iter().position(|&j| j == usize::MAX) {
        return Err(DecomposeError::NotADecomposition(format!("edge {e} is on no path")));
    }
    let n = g1.n();
    let items = (0..g1.m()).map(|e| Candidate {
        edge: e,
        ends: g1.edge(e),
        origin: origin[e],
    });
    let open = || MatchingSlot {
        covered: vec![false; n],
        origins: HashSet::new(),
        edges: Vec::new(),
    };
    let slots = first_fit(items, open, Some(3 * n)).map_err(|edge| DecomposeError::TooManyMatchings { edge, cap: 3 * n })?;
    Ok(MatchingFamily {
        matchings: slots.into_iter().map(|s| s.edges).collect(),
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::path_decompose;
    use crate::generators::{make_complete, make_path_graph};

    fn check(g: &Graph, fam: &MatchingFamily) {
        let mut seen = vec![0; g.m()];
        for m in &fam.matchings {
            let mut touched = HashSet::new();
            let mut origins = HashSet::new();
            for &e in m {
                seen[e] += 1;
                let (u, v) = g.edge(e);
                assert!(touched.insert(u) && touched.insert(v), "not a matching");
                assert!(origins.insert(fam.origin[e]), "two edges of one path");
            }
        }
        assert!(seen.iter().all(|&s| s == 1));
        assert!(fam.len() <= 3 * g.n());
    }

    #[test]
    fn single_edge() {
        let g = make_path_graph(2).unwrap();
        let fam = matching_decompose(&g, &path_decompose(&g).unwrap()).unwrap();
        assert_eq!(fam.matchings, vec![vec![0]]);
    }

    #[test]
    fn one_path_forces_one_edge_per_matching() {
        let g = make_path_graph(4).unwrap();
        let ps = path_decompose(&g).unwrap();
        assert_eq!(ps.len(), 1);
        let fam = matching_decompose(&g, &ps).unwrap();
        assert_eq!(fam.len(), 3);
        check(&g, &fam);
    }

    #[test]
    fn k4_two_paths() {
        let g = make_complete(4).unwrap();
        // K4 has four odd vertices, so two paths is the minimum.
        let ps = PathSystem::from_sequences(&g, &[vec![1, 0, 2, 3], vec![0, 3, 1, 2]]).unwrap();
        let fam = matching_decompose(&g, &ps).unwrap();
        check(&g, &fam);
        assert!(fam.len() <= 12);
    }

    #[test]
    fn rejects_non_decompositions() {
        let g = make_path_graph(4).unwrap();
        let partial = PathSystem::from_sequences(&g, &[[0, 1, 2]]).unwrap();
        assert!(matches!(
            matching_decompose(&g, &partial),
            Err(DecomposeError::NotADecomposition(_))
        ));
        let overlapping = PathSystem::from_sequences(&g, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(matching_decompose(&g, &overlapping).is_err());
    }
}
