//! Logarithmic separating families for ladders.
//!
//! A subset `A` of the gaps `1..n-1` between consecutive columns picks a
//! left-to-right path `P_A` of the ladder: it crosses gap `j` on the top
//! rail if `j ∈ A` and on the bottom rail otherwise, climbing a rung
//! whenever it changes rails, and it starts and ends on the bottom rail.
//!
//! So rail edge `j` lies on `P_A` according to whether `j ∈ A`, and rung `j`
//! lies on `P_A` exactly when membership changes between gaps `j-1` and `j`.
//! Give each gap a bit label and take one `P_A` per bit position. Rail
//! edges are then told apart by their labels, and rungs by the XOR of
//! neighbouring labels. The label of gap `j` is the triple
//! `(j, 1 ⊕ 2 ⊕ … ⊕ j, 1)`. Neighbouring XORs in the middle are
//! `(…, j, 0)`, so they are pairwise distinct, and the two end rungs carry
//! the constant bit. Adding both full rails separates rail edges from
//! rungs and top from bottom.

use crate::generators::{ladder_vertex, make_ladder};
use crate::graph::{Path, PathSystem, Vertex};
use crate::verify::verify;

use super::{at_least, ConstructionError};

/// The zig-zag path of the ladder of order `2n` encoded by a gap subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderSubsetPath {
    /// Gaps on the top rail; gap `j` joins columns `j` and `j + 1`, counted from 1.
    pub subset: Vec<usize>,
    pub path: Path,
}

impl LadderSubsetPath {
    pub fn new(n: usize, subset: &[usize]) -> Result<Self, ConstructionError> {
        at_least(n, 1)?;
        let mut on_top = vec![false; n + 1];
        for &j in subset {
            if j == 0 || j >= n {
                return Err(ConstructionError::BadSubset(format!("gap {j} outside 1..{}", n - 1)));
            }
            on_top[j] = true;
        }
        let g = make_ladder(n).unwrap();
        let at = |column: usize, rail: usize| ladder_vertex(n, column, rail);
        let mut seq: Vec<Vertex> = vec![at(0, 0)];
        let mut rail = 0;
        for (column, &top) in on_top.iter().enumerate().take(n).skip(1) {
            let want = usize::from(top);
            if want != rail {
                seq.push(at(column - 1, want));
                rail = want;
            }
            seq.push(at(column, rail));
        }
        if rail == 1 {
            seq.push(at(n - 1, 0));
        }
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        Ok(LadderSubsetPath {
            subset,
            path: Path::from_vertices(&g, &seq).expect("zig-zag walk follows ladder edges"),
        })
    }
}

fn bits_for(n: usize) -> usize {
    // Enough bits to hold every value below n.
    (usize::BITS - (n.max(2) - 1).leading_zeros()) as usize
}

/// A separating family of at most `2⌈log₂ n⌉ + 3` paths for the ladder of
/// order `2n`, built from labeled gap subsets and both rails, then pruned
/// by dropping members one at a time while the family still separates.
pub fn separate_ladder(n: usize) -> Result<PathSystem, ConstructionError> {
    at_least(n, 2)?;
    let g = make_ladder(n).unwrap();
    if n == 2 {
        // L₂ is a 4-cycle. Its two rungs lie on the same zig-zag paths, so
        // use two overlapping corners instead.
        let (a, b, c, d) = (ladder_vertex(2, 0, 1), ladder_vertex(2, 0, 0), ladder_vertex(2, 1, 0), ladder_vertex(2, 1, 1));
        return Ok(PathSystem::from_sequences(&g, &[[a, b, c], [b, c, d]]).unwrap());
    }
    let k = bits_for(n);
    let mut prefix = 0usize;
    let labels: Vec<u128> = (1..n)
        .map(|j| {
            prefix ^= j;
            (j as u128) | ((prefix as u128) << k) | (1u128 << (2 * k))
        })
        .collect();
    let mut members: Vec<Path> = (0..=2 * k)
        .map(|b| {
            let subset: Vec<usize> = (1..n).filter(|&j| labels[j - 1] >> b & 1 == 1).collect();
            LadderSubsetPath::new(n, &subset).unwrap().path
        })
        .collect();
    let bottom: Vec<Vertex> = (0..n).map(|j| ladder_vertex(n, j, 0)).collect();
    let top: Vec<Vertex> = (0..n).map(|j| ladder_vertex(n, j, 1)).collect();
    members.push(Path::from_vertices(&g, &bottom).unwrap());
    members.push(Path::from_vertices(&g, &top).unwrap());

    let mut fam = PathSystem::new(members).unwrap();
    debug_assert!(verify(&g, &fam).unwrap().separating);
    let mut i = 0;
    while i < fam.len() {
        let mut trial = fam.clone().into_paths();
        trial.remove(i);
        let trial = PathSystem::new(trial).unwrap();
        if verify(&g, &trial).unwrap().separating {
            fam = trial;
        } else {
            i += 1;
        }
    }
    Ok(fam)
}
