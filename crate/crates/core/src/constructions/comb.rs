use crate::generators::{comb_vertex, make_hair_comb};
use crate::graph::{tree_path, PathSystem};

use super::{at_least, path_family_on, ConstructionError};

/// Family of `n + 1` paths for the hair comb of order `3n`.
///
/// Writing `(i, layer)` for comb vertices with `i` counted from 1, the family
/// is the hair-to-hair paths `(i,2) → (i+1,1)` for `i < n`, plus
/// `(1,1) → (n,1)` and the spine `(1,0) → (n,0)`. The edge `(n,1)(n,2)` is
/// the only one left uncovered.
///
/// `HC₂` is the path on six vertices, where the two middle hair edges land
/// on the same members; it uses the path family instead, read from the
/// `(2,2)` end so the uncovered edge is still `(n,1)(n,2)`.
pub fn separate_hair_comb(n: usize) -> Result<PathSystem, ConstructionError> {
    at_least(n, 2)?;
    let g = make_hair_comb(n).unwrap();
    let v = |i: usize, layer: usize| comb_vertex(n, i - 1, layer);
    if n == 2 {
        let order = [v(2, 2), v(2, 1), v(2, 0), v(1, 0), v(1, 1), v(1, 2)];
        return Ok(PathSystem::from_sequences(&g, &path_family_on(&order)).unwrap());
    }
    let ends = (1..n)
        .map(|i| (v(i, 2), v(i + 1, 1)))
        .chain([(v(1, 1), v(n, 1)), (v(1, 0), v(n, 0))]);
    let paths = ends.map(|(a, b)| tree_path(&g, a, b).unwrap()).collect();
    Ok(PathSystem::new(paths).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    #[test]
    fn separates_with_one_uncovered_hair_tip() {
        for n in 2..30 {
            let g = make_hair_comb(n).unwrap();
            let fam = separate_hair_comb(n).unwrap();
            assert_eq!(fam.len(), n + 1);
            let r = verify(&g, &fam).unwrap();
            assert!(r.separating, "n = {n}");
            let tip = g.edge_id(comb_vertex(n, n - 1, 1), comb_vertex(n, n - 1, 2)).unwrap();
            assert_eq!(r.uncovered, vec![tip]);
        }
    }

    #[test]
    fn displayed_family_fails_on_hc2() {
        // The generic formula makes both hair roots of HC₂ indistinguishable.
        let n = 2;
        let g = make_hair_comb(n).unwrap();
        let v = |i: usize, layer: usize| comb_vertex(n, i - 1, layer);
        let ends = [(v(1, 2), v(2, 1)), (v(1, 1), v(2, 1)), (v(1, 0), v(2, 0))];
        let fam = PathSystem::new(ends.iter().map(|&(a, b)| tree_path(&g, a, b).unwrap()).collect()).unwrap();
        assert!(!verify(&g, &fam).unwrap().separating);
    }
}
