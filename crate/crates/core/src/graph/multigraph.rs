use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use super::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultigraphError {
    #[error("edge {index} is a loop at vertex {vertex}")]
    Loop { index: usize, vertex: Vertex },
    #[error("edge {index} has an endpoint out of range")]
    VertexOutOfRange { index: usize },
    #[error("colour class {color} is not a single cycle")]
    NotACycle { color: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColoredEdge {
    pub u: Vertex,
    pub v: Vertex,
    /// A vertex of some other graph that this edge stands in for.
    pub color: usize,
}

/// Edge-coloured multigraph in which every colour class is one cycle.
#[derive(Debug, Clone)]
pub struct ColoredMultigraph {
    n: usize,
    edges: Vec<ColoredEdge>,
    /// Edge ids of each class in cycle order.
    classes: BTreeMap<usize, Vec<usize>>,
    /// `(class position, class length)` per edge.
    position: Vec<(usize, usize)>,
    degree: Vec<usize>,
}

impl ColoredMultigraph {
    pub fn new(n: usize, edges: Vec<ColoredEdge>) -> Result<Self, MultigraphError> {
        let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut degree = vec![0; n];
        for (index, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(MultigraphError::VertexOutOfRange { index });
            }
            if e.u == e.v {
                return Err(MultigraphError::Loop { index, vertex: e.u });
            }
            degree[e.u] += 1;
            degree[e.v] += 1;
            by_color.entry(e.color).or_default().push(index);
        }
        let mut classes = BTreeMap::new();
        let mut position = vec![(0, 0); edges.len()];
        for (color, ids) in by_color {
            let order = cycle_order(&edges, &ids).ok_or(MultigraphError::NotACycle { color })?;
            for (i, &e) in order.iter().enumerate() {
                position[e] = (i, order.len());
            }
            classes.insert(color, order);
        }
        Ok(ColoredMultigraph {
            n,
            edges,
            classes,
            position,
            degree,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degree[v]
    }

    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.keys().copied()
    }

    /// Edge ids of one colour class in cycle order.
    pub fn class(&self, color: usize) -> &[usize] {
        self.classes.get(&color).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The two edges adjacent to `e` around its colour cycle.
    pub fn cycle_neighbors(&self, e: usize) -> (usize, usize) {
        let (i, len) = self.position[e];
        let class = &self.classes[&self.edges[e].color];
        (class[(i + len - 1) % len], class[(i + 1) % len])
    }
}

/// Orders `ids` around their cycle, or `None` if they do not form one.
fn cycle_order(edges: &[ColoredEdge], ids: &[usize]) -> Option<Vec<usize>> {
    let mut at: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for &e in ids {
        at.entry(edges[e].u).or_default().push(e);
        at.entry(edges[e].v).or_default().push(e);
    }
    if ids.len() < 2 || at.len() != ids.len() || at.values().any(|l| l.len() != 2) {
        return None;
    }
    let first = ids[0];
    let mut order = vec![first];
    let start = edges[first].u;
    let mut cur = edges[first].v;
    let mut prev = first;
    while cur != start {
        let pair = &at[&cur];
        let next = if pair[0] == prev { pair[1] } else { pair[0] };
        if order.len() == ids.len() {
            return None;
        }
        order.push(next);
        let e = edges[next];
        cur = if e.u == cur { e.v } else { e.u };
        prev = next;
    }
    (order.len() == ids.len()).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ce(u: Vertex, v: Vertex, color: usize) -> ColoredEdge {
        ColoredEdge { u, v, color }
    }

    #[test]
    fn accepts_cycles_and_orders_them() {
        let f = ColoredMultigraph::new(
            4,
            vec![ce(0, 1, 9), ce(2, 0, 9), ce(1, 2, 9), ce(0, 1, 7), ce(1, 3, 7), ce(3, 0, 7)],
        )
        .unwrap();
        assert_eq!(f.class(9), &[0, 2, 1]);
        assert_eq!(f.cycle_neighbors(2), (0, 1));
        assert_eq!(f.degree(0), 4);
        assert_eq!(f.colors().collect::<Vec<_>>(), vec![7, 9]);
    }

    #[test]
    fn rejects_non_cycles() {
        assert_eq!(
            ColoredMultigraph::new(4, vec![ce(0, 1, 5), ce(1, 2, 5), ce(2, 3, 5)]).unwrap_err(),
            MultigraphError::NotACycle { color: 5 }
        );
        // Two disjoint triangles in one colour.
        let two = vec![ce(0, 1, 1), ce(1, 2, 1), ce(2, 0, 1), ce(3, 4, 1), ce(4, 5, 1), ce(5, 3, 1)];
        assert!(ColoredMultigraph::new(6, two).is_err());
        assert!(matches!(
            ColoredMultigraph::new(2, vec![ce(1, 1, 0)]),
            Err(MultigraphError::Loop { .. })
        ));
    }
}
