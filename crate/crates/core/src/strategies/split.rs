use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgeId, Graph};

use super::StrategyError;

/// Two spanning subgraphs whose edge sets partition a host graph.
#[derive(Debug, Clone)]
pub struct SplitPair {
    pub g1: Graph,
    pub g2: Graph,
    /// Host edge ids on each side, in host order.
    pub first: Vec<EdgeId>,
    pub second: Vec<EdgeId>,
    /// Number of coin-flip rounds it took.
    pub attempts: usize,
}

/// Puts each edge on either side with probability 1/2, repeating until both
/// sides have minimum degree at least `min_deg_target`.
pub fn random_split(g: &Graph, min_deg_target: usize, max_retries: usize, seed: u64) -> Result<SplitPair, StrategyError> {
    if max_retries == 0 {
        return Err(StrategyError::InvalidParameter("max_retries must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_retries {
        let (mut first, mut second) = (Vec::new(), Vec::new());
        for e in 0..g.m() {
            if rng.gen_bool(0.5) {
                first.push(e);
            } else {
                second.push(e);
            }
        }
        let g1 = g.edge_subgraph(&first);
        let g2 = g.edge_subgraph(&second);
        if g.n() == 0 || (g1.min_degree() >= min_deg_target && g2.min_degree() >= min_deg_target) {
            return Ok(SplitPair {
                g1,
                g2,
                first,
                second,
                attempts: attempt,
            });
        }
    }
    Err(StrategyError::RetriesExhausted { retries: max_retries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_path_graph};

    #[test]
    fn k6_target_one() {
        let g = make_complete(6).unwrap();
        let s = random_split(&g, 1, 100, 0).unwrap();
        assert_eq!(s.g1.m() + s.g2.m(), g.m());
        assert!(s.g1.min_degree() >= 1 && s.g2.min_degree() >= 1);
        let mut all: Vec<_> = s.first.iter().chain(&s.second).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..g.m()).collect::<Vec<_>>());
    }

    #[test]
    fn impossible_target() {
        let g = make_path_graph(3).unwrap();
        assert_eq!(
            random_split(&g, 2, 100, 0).unwrap_err(),
            StrategyError::RetriesExhausted { retries: 100 }
        );
    }

    #[test]
    fn zero_target_first_try() {
        let g = make_path_graph(7).unwrap();
        assert_eq!(random_split(&g, 0, 1, 9).unwrap().attempts, 1);
        assert!(random_split(&g, 0, 0, 9).is_err());
    }
}
