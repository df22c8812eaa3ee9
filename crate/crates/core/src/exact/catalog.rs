use crate::graph::{Graph, Path, Vertex};

use super::ExactError;

/// Every simple path of length at least one, each listed once in the
/// orientation that starts at its smaller endpoint.
#[derive(Debug, Clone)]
pub struct PathCatalog {
    paths: Vec<Vec<Vertex>>,
    masks: Vec<u128>,
}

impl PathCatalog {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Vertex sequence of path `i`.
    pub fn vertices(&self, i: usize) -> &[Vertex] {
        &self.paths[i]
    }

    /// Edge-id bitmask of path `i`.
    pub fn mask(&self, i: usize) -> u128 {
        self.masks[i]
    }

    pub fn masks(&self) -> &[u128] {
        &self.masks
    }

    pub fn path(&self, g: &Graph, i: usize) -> Path {
        Path::from_vertices(g, &self.paths[i]).expect("catalog paths lie in their graph")
    }
}

/// Lists all simple paths of `g`, failing once more than `cap` are found.
pub fn enumerate_paths(g: &Graph, cap: usize) -> Result<PathCatalog, ExactError> {
    if cap == 0 {
        return Err(ExactError::ZeroCap);
    }
    if g.m() > 128 {
        return Err(ExactError::TooManyEdges { m: g.m() });
    }
    let mut cat = PathCatalog {
        paths: Vec::new(),
        masks: Vec::new(),
    };
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        let mut stack = vec![s];
        extend(g, &mut stack, 0, &mut on, &mut cat, cap)?;
        on[s] = false;
    }
    Ok(cat)
}

fn extend(g: &Graph, stack: &mut Vec<Vertex>, mask: u128, on: &mut [bool], cat: &mut PathCatalog, cap: usize) -> Result<(), ExactError> {
    let last = *stack.last().unwrap();
    for &(w, e) in g.incident(last) {
        if on[w] {
            continue;
        }
        let mask = mask | 1 << e;
        stack.push(w);
        on[w] = true;
        if stack[0] < w {
            if cat.paths.len() == cap {
                return Err(ExactError::CatalogOverflow { cap });
            }
            cat.paths.push(stack.clone());
            cat.masks.push(mask);
        }
        extend(g, stack, mask, on, cat, cap)?;
        on[w] = false;
        stack.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_path_graph};

    #[test]
    fn p3() {
        let g = make_path_graph(3).unwrap();
        let cat = enumerate_paths(&g, 10).unwrap();
        let mut all: Vec<Vec<Vertex>> = (0..cat.len()).map(|i| cat.vertices(i).to_vec()).collect();
        all.sort();
        assert_eq!(all, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2]]);
    }

    #[test]
    fn complete_graph_counts() {
        // Paths with j edges in K_n: n!/(n-j-1)!/2 ordered-then-halved.
        for n in 2..=6usize {
            let expected: usize = (1..n).map(|j| (n - j..=n).product::<usize>() / 2).sum();
            assert_eq!(enumerate_paths(&make_complete(n).unwrap(), 10_000).unwrap().len(), expected);
        }
        assert_eq!(enumerate_paths(&make_complete(3).unwrap(), 10).unwrap().len(), 6);
    }

    #[test]
    fn caps() {
        let g = make_complete(5).unwrap();
        assert_eq!(enumerate_paths(&g, 5).unwrap_err(), ExactError::CatalogOverflow { cap: 5 });
        assert_eq!(enumerate_paths(&g, 0).unwrap_err(), ExactError::ZeroCap);
    }
}
