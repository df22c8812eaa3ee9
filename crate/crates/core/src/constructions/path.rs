use crate::generators::make_path_graph;
use crate::graph::{PathSystem, Vertex};

use super::{at_least, ConstructionError};

/// Vertex sequences of the optimal family for a path whose vertices, in
/// order along the path, are `order`.
///
/// With positions numbered from 1 and `p(a, b)` the subpath from position
/// `a` to `b`, odd `n ≥ 5` uses `p(2,4)`, `p(n-2,n)` and `p(2i+1, 2i+4)` for
/// `1 ≤ i ≤ (n-5)/2`; `n = 3` uses `p(2,3)`; even `n` adds `p(n-1,n)` to the
/// family for `n - 1`. The first edge is the only one left uncovered.
pub fn path_family_on(order: &[Vertex]) -> Vec<Vec<Vertex>> {
    let n = order.len();
    let sub = |a: usize, b: usize| order[a - 1..b].to_vec();
    if n < 3 {
        return Vec::new();
    }
    if n.is_multiple_of(2) {
        let mut fam = path_family_on(&order[..n - 1]);
        fam.push(sub(n - 1, n));
        return fam;
    }
    if n == 3 {
        return vec![sub(2, 3)];
    }
    let mut fam = vec![sub(2, 4), sub(n - 2, n)];
    fam.extend((1..=(n - 5) / 2).map(|i| sub(2 * i + 1, 2 * i + 4)));
    fam
}

/// The `⌊n/2⌋`-member family for the path `0 - 1 - ... - (n-1)`.
pub fn separate_path_graph(n: usize) -> Result<PathSystem, ConstructionError> {
    at_least(n, 3)?;
    let g = make_path_graph(n).unwrap();
    let order: Vec<Vertex> = (0..n).collect();
    Ok(PathSystem::from_sequences(&g, &path_family_on(&order)).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    #[test]
    fn small_cases() {
        let fam = separate_path_graph(3).unwrap();
        assert_eq!(fam.to_text(), "1\n1 2\n");
        assert_eq!(separate_path_graph(4).unwrap().len(), 2);
        assert!(separate_path_graph(2).is_err());
    }

    #[test]
    fn eleven_vertices() {
        // Segments drawn above P11, in 1-based positions: 2-4, 9-11, 3-6, 5-8, 7-10.
        let fam = separate_path_graph(11).unwrap();
        let ends: Vec<(usize, usize)> = fam.iter().map(|p| p.endpoints()).map(|(a, b)| (a + 1, b + 1)).collect();
        assert_eq!(ends, vec![(2, 4), (9, 11), (3, 6), (5, 8), (7, 10)]);
    }

    #[test]
    fn sizes_and_separation() {
        for n in 3..60 {
            let g = make_path_graph(n).unwrap();
            let fam = separate_path_graph(n).unwrap();
            assert_eq!(fam.len(), n / 2);
            let r = verify(&g, &fam).unwrap();
            assert!(r.separating, "n = {n}");
            assert_eq!(r.uncovered, vec![0]);
        }
    }
}
