use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::{first_fit, Slot};
use crate::graph::{ColoredEdge, ColoredMultigraph, Graph, Path, PathSystem, Vertex};

use super::alternating::{alternating_cover, expand_piece, split_alternating};
use super::common::CommonNeighborGraph;
use super::min_degree::min_degree_strategy;
use super::{ceil_at_least_one, check_fraction, StrategyError, StrategyOutcome};

/// One peeling level.
#[derive(Debug, Clone)]
pub struct LevelTrace {
    /// Host ids of the core `H`, in increasing order; local vertex `i` of
    /// `crossing` is `core[i]`.
    pub core: Vec<Vertex>,
    /// Vertices left over after removing the core.
    pub rest: usize,
    /// The crossing multigraph on the core, coloured by host ids of
    /// outside vertices. `None` on the last level.
    pub crossing: Option<ColoredMultigraph>,
    /// Edge ids of `crossing` in each matching of the first and second family.
    pub family1: Vec<Vec<usize>>,
    pub family2: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct DenseTrace {
    pub levels: Vec<LevelTrace>,
}

/// Separating system for graphs in which every set of `k ≥ √n` vertices
/// spans at least `c·k²` edges.
pub fn dense_strategy(g: &Graph, c: f64, seed: u64, max_retries: usize) -> Result<StrategyOutcome, StrategyError> {
    dense_trace(g, c, seed, max_retries).map(|(o, _)| o)
}

fn is_small(size: usize, n: usize) -> bool {
    size * size <= n
}

/// [`dense_strategy`] together with its peeling levels and matching families.
///
/// The density hypothesis is only spot-checked on a few random vertex sets;
/// misses are counted in the `density_spot_failures` diagnostic.
pub fn dense_trace(g: &Graph, c: f64, seed: u64, max_retries: usize) -> Result<(StrategyOutcome, DenseTrace), StrategyError> {
    check_fraction("c", c, false)?;
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("density_spot_failures".to_string(), spot_check(g, c, &mut rng) as i64);

    let mut paths: Vec<Path> = Vec::new();
    let mut levels = Vec::new();
    let mut remaining: Vec<Vertex> = (0..n).collect();
    let (mut internal, mut crossing, mut leftover) = (0, 0, 0);
    while !remaining.is_empty() {
        let level = levels.len() + 1;
        let core = if is_small(remaining.len(), n) {
            remaining.clone()
        } else {
            let k = (c * remaining.len() as f64 / 2.0).ceil() as usize;
            let core = k_core(g, &remaining, k);
            if core.is_empty() {
                return Err(StrategyError::failed(
                    "core-peeling",
                    format!("{k}-core of a {}-vertex remainder is empty", remaining.len()),
                ));
            }
            core
        };
        let in_core: HashSet<Vertex> = core.iter().copied().collect();
        let rest: Vec<Vertex> = remaining.iter().copied().filter(|v| !in_core.contains(v)).collect();
        diagnostics.insert(format!("core_size_{level}"), core.len() as i64);
        diagnostics.insert(format!("remainder_before_{level}"), remaining.len() as i64);

        let (hg, _) = g.induced_subgraph(&core);
        let before = paths.len();
        if is_small(core.len(), n) {
            for &(a, b) in hg.edges() {
                paths.push(Path::from_vertices(g, &[core[a], core[b]]).unwrap());
            }
        } else {
            let sub = min_degree_strategy(&hg, c / 2.0, rng.gen(), max_retries)
                .map_err(|e| StrategyError::failed("internal", format!("level {level}: {e}")))?;
            if !sub.verified {
                return Err(StrategyError::failed("internal", format!("level {level}: result does not separate")));
            }
            for p in &sub.system {
                let seq: Vec<Vertex> = p.vertices().iter().map(|&v| core[v]).collect();
                paths.push(Path::from_vertices(g, &seq).unwrap());
            }
        }
        internal += paths.len() - before;

        let mut trace = LevelTrace {
            core: core.clone(),
            rest: rest.len(),
            crossing: None,
            family1: Vec::new(),
            family2: Vec::new(),
        };
        if !rest.is_empty() {
            let before = paths.len();
            leftover += separate_crossing(g, c, &core, &hg, &rest, &mut paths, &mut trace)?;
            crossing += paths.len() - before;
            let f = trace.crossing.as_ref().unwrap();
            diagnostics.insert(format!("crossing_edges_{level}"), f.len() as i64);
            diagnostics.insert(format!("family1_{level}"), trace.family1.len() as i64);
            diagnostics.insert(format!("family2_{level}"), trace.family2.len() as i64);
        }
        levels.push(trace);
        remaining = rest;
    }
    diagnostics.insert("levels".into(), levels.len() as i64);
    diagnostics.insert("internal_paths".into(), internal as i64);
    diagnostics.insert("crossing_paths".into(), (crossing - leftover) as i64);
    diagnostics.insert("leftover_edges".into(), leftover as i64);
    let system = PathSystem::new(paths).expect("members have positive length");
    Ok((StrategyOutcome::finish(g, "dense", system, diagnostics), DenseTrace { levels }))
}

/// Largest induced subgraph of `g[within]` with minimum degree at least `k`,
/// found by deleting the smallest-index vertex of degree below `k` until none remain.
fn k_core(g: &Graph, within: &[Vertex], k: usize) -> Vec<Vertex> {
    let mut alive = vec![false; g.n()];
    for &v in within {
        alive[v] = true;
    }
    let mut deg: Vec<usize> = (0..g.n()).map(|v| if alive[v] { g.neighbors(v).filter(|&w| alive[w]).count() } else { 0 }).collect();
    let mut low: BTreeSet<Vertex> = within.iter().copied().filter(|&v| deg[v] < k).collect();
    while let Some(v) = low.pop_first() {
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    low.insert(w);
                }
            }
        }
    }
    within.iter().copied().filter(|&v| alive[v]).collect()
}

/// Counts sampled vertex sets of size at least `√n` spanning fewer than `c·k²` edges.
fn spot_check(g: &Graph, c: f64, rng: &mut ChaCha8Rng) -> usize {
    let n = g.n();
    let lo = (n as f64).sqrt().ceil() as usize;
    if n == 0 || lo > n {
        return 0;
    }
    let mut misses = 0;
    for _ in 0..16 {
        let k = rng.gen_range(lo..=n);
        let set = rand::seq::index::sample(rng, n, k).into_vec();
        let (sub, _) = g.induced_subgraph(&set);
        if (sub.m() as f64) < c * (k * k) as f64 {
            misses += 1;
        }
    }
    misses
}

struct RainbowSlot {
    covered: HashSet<Vertex>,
    colors: HashSet<usize>,
    edges: Vec<usize>,
}

impl Slot<(usize, ColoredEdge)> for RainbowSlot {
    fn admits(&self, (_, e): &(usize, ColoredEdge)) -> bool {
        !self.covered.contains(&e.u) && !self.covered.contains(&e.v) && !self.colors.contains(&e.color)
    }

    fn insert(&mut self, (id, e): (usize, ColoredEdge)) {
        self.covered.extend([e.u, e.v]);
        self.colors.insert(e.color);
        self.edges.push(id);
    }
}

/// Rainbow matching that also keeps apart edges related through the first
/// family: `f` may not join `e` when `f`, or a cycle neighbour of `f`,
/// shares a first-family matching with `e` (or the same with roles swapped).
struct ShadowSlot {
    inner: RainbowSlot,
    /// First-family matchings of the edges already here.
    present: HashSet<usize>,
    /// First-family matchings whose shadow contains an edge already here.
    shadowed: HashSet<usize>,
}

struct ShadowItem {
    id: usize,
    edge: ColoredEdge,
    home: usize,
    /// First-family matchings of the edge and of its two cycle neighbours.
    shadows: [usize; 3],
}

impl Slot<ShadowItem> for ShadowSlot {
    fn admits(&self, it: &ShadowItem) -> bool {
        self.inner.admits(&(it.id, it.edge))
            && !self.shadowed.contains(&it.home)
            && it.shadows.iter().all(|s| !self.present.contains(s))
    }

    fn insert(&mut self, it: ShadowItem) {
        self.present.insert(it.home);
        self.shadowed.extend(it.shadows);
        self.inner.insert((it.id, it.edge));
    }
}

fn rainbow() -> RainbowSlot {
    RainbowSlot {
        covered: HashSet::new(),
        colors: HashSet::new(),
        edges: Vec::new(),
    }
}

/// Separates the edges between the core and the rest. Returns how many
/// of the added paths are single leftover edges.
fn separate_crossing(
    g: &Graph,
    c: f64,
    core: &[Vertex],
    hg: &Graph,
    rest: &[Vertex],
    out: &mut Vec<Path>,
    trace: &mut LevelTrace,
) -> Result<usize, StrategyError> {
    let local: HashMap<Vertex, Vertex> = core.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut colored = Vec::new();
    let mut leftover = 0;
    for &v in rest {
        let xs: Vec<Vertex> = g.neighbors(v).filter_map(|w| local.get(&w).copied()).collect();
        if xs.len() >= 3 {
            for (i, &x) in xs.iter().enumerate() {
                let y = xs[(i + 1) % xs.len()];
                colored.push(ColoredEdge { u: x, v: y, color: v });
            }
        } else {
            for &x in &xs {
                out.push(Path::from_vertices(g, &[v, core[x]]).unwrap());
                leftover += 1;
            }
        }
    }
    let f = ColoredMultigraph::new(core.len(), colored).map_err(|e| StrategyError::failed("crossing-multigraph", e))?;

    let items = f.edges().iter().copied().enumerate();
    let family1: Vec<Vec<usize>> = first_fit(items, rainbow, None).unwrap().into_iter().map(|s| s.edges).collect();
    let mut home = vec![0; f.len()];
    for (j, m) in family1.iter().enumerate() {
        for &e in m {
            home[e] = j;
        }
    }
    let items = (0..f.len()).map(|id| {
        let (a, b) = f.cycle_neighbors(id);
        ShadowItem {
            id,
            edge: f.edges()[id],
            home: home[id],
            shadows: [home[id], home[a], home[b]],
        }
    });
    let open = || ShadowSlot {
        inner: rainbow(),
        present: HashSet::new(),
        shadowed: HashSet::new(),
    };
    let family2: Vec<Vec<usize>> = first_fit(items, open, None).unwrap().into_iter().map(|s| s.inner.edges).collect();

    let h = core.len() as f64;
    let aux = CommonNeighborGraph::new(hg, (c * c * h / 24.0).floor() as usize + 1);
    let piece_len = ceil_at_least_one(c * c * h / 48.0);
    for m in family1.iter().chain(&family2) {
        let pairs: Vec<(Vertex, Vertex)> = m.iter().map(|&e| (f.edges()[e].u, f.edges()[e].v)).collect();
        let color: HashMap<(Vertex, Vertex), Vertex> = m
            .iter()
            .flat_map(|&e| {
                let ce = f.edges()[e];
                [((ce.u, ce.v), ce.color), ((ce.v, ce.u), ce.color)]
            })
            .collect();
        for q in alternating_cover(&pairs, &aux) {
            for piece in split_alternating(&q, piece_len) {
                let seq = expand_piece(&piece, hg, |x, y| color.get(&(x, y)).copied(), |v| core[v])?;
                out.push(Path::from_vertices(g, &seq).map_err(|e| StrategyError::failed("crossing-expansion", e))?);
            }
        }
    }
    trace.crossing = Some(f);
    trace.family1 = family1;
    trace.family2 = family2;
    Ok(leftover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gnp, make_complete};

    #[test]
    fn clique_is_one_level() {
        let g = make_complete(12).unwrap();
        let (o, t) = dense_trace(&g, 0.25, 3, 100).unwrap();
        assert!(o.verified);
        assert_eq!(t.levels.len(), 1);
        assert_eq!(t.levels[0].core.len(), 12);
    }

    #[test]
    fn core_matches_batch_peeling() {
        // Oracle: strip every low-degree vertex at once, round after round.
        let g = gnp(40, 0.2, 5).unwrap();
        let all: Vec<Vertex> = (0..40).collect();
        for k in 1..8 {
            let mut set: Vec<Vertex> = all.clone();
            loop {
                let keep: Vec<Vertex> = set
                    .iter()
                    .copied()
                    .filter(|&v| g.neighbors(v).filter(|w| set.contains(w)).count() >= k)
                    .collect();
                if keep.len() == set.len() {
                    break;
                }
                set = keep;
            }
            assert_eq!(k_core(&g, &all, k), set, "k = {k}");
        }
    }

    #[test]
    fn random_dense_graph() {
        let g = gnp(100, 0.6, 3).unwrap();
        let (o, t) = dense_trace(&g, 0.1, 3, 100).unwrap();
        assert!(o.verified);
        let g0 = 100.0f64;
        assert!(t.levels[0].core.len() as f64 >= 0.1f64.sqrt() * g0);
        for lvl in &t.levels {
            if let Some(f) = &lvl.crossing {
                for m in lvl.family1.iter().chain(&lvl.family2) {
                    let colors: HashSet<usize> = m.iter().map(|&e| f.edges()[e].color).collect();
                    assert_eq!(colors.len(), m.len());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_c() {
        let g = make_complete(5).unwrap();
        assert!(dense_strategy(&g, 0.0, 0, 10).is_err());
        assert!(dense_strategy(&g, f64::NAN, 0, 10).is_err());
    }
}
