//! Benchmark corpora and CSV rows.
//!
//! A corpus spec names a family and a parameter range, with optional
//! settings: `path:3..12`, `comb:2..10`, `gnp:60..120:p=0.5:step=20`,
//! `tree:10..50:step=10`. Plural family names (`paths`, `combs`) and an
//! `n=` prefix on the range are accepted too. Several specs may be joined
//! with commas.

use std::fmt::Write as _;
use std::time::Instant;

use thiserror::Error;

use crate::generators::{gnp, make_complete, make_hair_comb, make_ladder, make_path_graph, make_star, random_tree, GenError};
use crate::graph::Graph;
use crate::strategies::{StrategyKind, StrategyOptions};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("bad corpus spec `{spec}`: {reason}")]
    Spec { spec: String, reason: String },
    #[error(transparent)]
    Generator(#[from] GenError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Star,
    Comb,
    Ladder,
    Complete,
    Gnp,
    Tree,
}

impl Family {
    fn parse(s: &str) -> Option<Family> {
        Some(match s.trim_end_matches('s') {
            "path" => Family::Path,
            "star" => Family::Star,
            "comb" => Family::Comb,
            "ladder" => Family::Ladder,
            "complete" => Family::Complete,
            "gnp" => Family::Gnp,
            "tree" | "tree-random" => Family::Tree,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Comb => "comb",
            Family::Ladder => "ladder",
            Family::Complete => "complete",
            Family::Gnp => "gnp",
            Family::Tree => "tree",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub family: Family,
    pub lo: usize,
    pub hi: usize,
    pub step: usize,
    /// Edge probability, used by `gnp` only.
    pub p: f64,
}

/// Parses one or more comma-separated corpus specs.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusSpec>, BenchError> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(parse_one).collect()
}

fn parse_one(spec: &str) -> Result<CorpusSpec, BenchError> {
    let bad = |reason: &str| BenchError::Spec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    let mut parts = spec.split(':');
    let family = Family::parse(parts.next().unwrap_or("")).ok_or_else(|| bad("unknown family"))?;
    let range = parts.next().ok_or_else(|| bad("missing range"))?;
    let range = range.strip_prefix("n=").unwrap_or(range);
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (a.parse().ok(), b.strip_prefix('=').unwrap_or(b).parse().ok()),
        None => (range.parse().ok(), range.parse().ok()),
    };
    let (lo, hi) = lo.zip(hi).ok_or_else(|| bad("range must look like 3..12"))?;
    if lo > hi {
        return Err(bad("empty range"));
    }
    let mut out = CorpusSpec {
        family,
        lo,
        hi,
        step: 1,
        p: 0.5,
    };
    for kv in parts {
        match kv.split_once('=') {
            Some(("p", v)) => out.p = v.parse().map_err(|_| bad("p must be a number"))?,
            Some(("step", v)) => out.step = v.parse().ok().filter(|&s| s > 0).ok_or_else(|| bad("step must be positive"))?,
            _ => return Err(bad("unknown setting")),
        }
    }
    Ok(out)
}

/// One benchmark instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
}

/// Expands a spec into graphs. Random families draw instance `i` with seed `seed + i`.
pub fn instances(spec: &CorpusSpec, seed: u64) -> Result<Vec<Instance>, BenchError> {
    let mut out = Vec::new();
    for (i, k) in (spec.lo..=spec.hi).step_by(spec.step).enumerate() {
        let s = seed.wrapping_add(i as u64);
        let (label, graph) = match spec.family {
            Family::Path => (format!("path-{k}"), make_path_graph(k)?),
            Family::Star => (format!("star-{k}"), make_star(k)?),
            Family::Comb => (format!("comb-{k}"), make_hair_comb(k)?),
            Family::Ladder => (format!("ladder-{k}"), make_ladder(k)?),
            Family::Complete => (format!("complete-{k}"), make_complete(k)?),
            Family::Gnp => (format!("gnp-{k}-{}-s{s}", spec.p), gnp(k, spec.p, s)?),
            Family::Tree => (format!("tree-{k}-s{s}"), random_tree(k, s)?),
        };
        out.push(Instance { label, graph });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    /// Strategy that produced the system, or the requested one on failure.
    pub strategy: String,
    pub size: Option<usize>,
    pub verified: bool,
    pub millis: u128,
    pub error: Option<String>,
}

pub const CSV_HEADER: &str = "graph,n,m,strategy,size,size_per_n,verified,millis";

impl BenchRow {
    pub fn size_per_n(&self) -> Option<f64> {
        self.size.filter(|_| self.n > 0).map(|s| s as f64 / self.n as f64)
    }

    pub fn csv_line(&self) -> String {
        let size = self.size.map(|s| s.to_string()).unwrap_or_default();
        let ratio = self.size_per_n().map(|r| format!("{r:.4}")).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.graph, self.n, self.m, self.strategy, size, ratio, self.verified, self.millis
        )
    }
}

/// Runs `kind` on every instance of every spec, in order.
pub fn run_bench(specs: &[CorpusSpec], kind: StrategyKind, opts: &StrategyOptions) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    for spec in specs {
        for inst in instances(spec, opts.seed)? {
            let start = Instant::now();
            let result = kind.run(&inst.graph, opts);
            let millis = start.elapsed().as_millis();
            let (strategy, size, verified, error) = match result {
                Ok(o) => (o.strategy_name, Some(o.size), o.verified, None),
                Err(e) => (kind.name().to_string(), None, false, Some(e.to_string())),
            };
            rows.push(BenchRow {
                graph: inst.label,
                n: inst.graph.n(),
                m: inst.graph.m(),
                strategy,
                size,
                verified,
                millis,
                error,
            });
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(out, "{}", r.csv_line()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_specs() {
        let specs = parse_corpus("paths:3..12, gnp:n=60..120:p=0.5:step=20").unwrap();
        assert_eq!(specs[0].family, Family::Path);
        assert_eq!((specs[0].lo, specs[0].hi, specs[0].step), (3, 12, 1));
        assert_eq!(specs[1].p, 0.5);
        assert_eq!(instances(&specs[1], 0).unwrap().len(), 4);
        for bad in ["nope:1..2", "path", "path:5..3", "path:1..x", "gnp:3..4:q=1", "path:3..4:step=0"] {
            assert!(parse_corpus(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn path_rows() {
        let specs = parse_corpus("path:3..12").unwrap();
        let rows = run_bench(&specs, StrategyKind::Path, &StrategyOptions::default()).unwrap();
        for r in &rows {
            assert_eq!(r.size, Some(r.n / 2));
            assert!(r.verified);
        }
        let csv = to_csv(&rows);
        assert!(csv.starts_with(CSV_HEADER));
        assert!(csv.lines().nth(1).unwrap().starts_with("path-3,3,2,path,1,0.3333,true,"));
    }

    #[test]
    fn failures_become_rows() {
        let specs = parse_corpus("path:5").unwrap();
        let rows = run_bench(&specs, StrategyKind::MinDegree, &StrategyOptions { c: Some(0.5), ..Default::default() }).unwrap();
        assert_eq!(rows[0].size, None);
        assert!(!rows[0].verified);
        assert!(rows[0].error.is_some());
    }
}
