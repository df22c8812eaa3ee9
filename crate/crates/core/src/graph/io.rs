//! Plain-text interchange formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`.
//! Path system: a header line `k`, then `k` lines of space-separated vertices.
//!
//! Blank lines are ignored; line numbers in errors are 1-based physical lines.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError, Path, PathError, PathSystem, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: {source}")]
    Path { line: usize, source: PathError },
    #[error("expected {expected} records after the header, found {found}")]
    Count { expected: usize, found: usize },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| ParseError::Malformed {
                line,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })
        })
        .collect()
}

impl Graph {
    /// Parses the edge-list format. Edge indices follow file order.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut lines = content_lines(text);
        let (hline, header) = lines.next().ok_or(ParseError::Malformed {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        let [n, m] = nums[..] else {
            return Err(ParseError::Malformed {
                line: hline,
                message: "header must be `n m`".into(),
            });
        };
        let mut g = Graph::empty(n);
        for (line, l) in lines {
            if g.m() == m {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("unexpected record after {m} edges"),
                });
            }
            let nums = parse_numbers(line, l)?;
            let [u, v] = nums[..] else {
                return Err(ParseError::Malformed {
                    line,
                    message: "edge must be `u v`".into(),
                });
            };
            g.push_edge(u, v).map_err(|source| ParseError::Graph { line, source })?;
        }
        if g.m() != m {
            return Err(ParseError::Count {
                expected: m,
                found: g.m(),
            });
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Serializes to the edge-list format with canonical endpoint order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.m() + 1));
        let _ = writeln!(out, "{} {}", self.n, self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl PathSystem {
    /// Parses the path-system format against host `g`.
    pub fn parse(g: &Graph, text: &str) -> Result<PathSystem, ParseError> {
        let mut lines = content_lines(text);
        let (hline, header) = lines.next().ok_or(ParseError::Malformed {
            line: 1,
            message: "missing header `k`".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        let [k] = nums[..] else {
            return Err(ParseError::Malformed {
                line: hline,
                message: "header must be a single count".into(),
            });
        };
        let mut ps = PathSystem::default();
        for (line, l) in lines {
            if ps.len() == k {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("unexpected record after {k} paths"),
                });
            }
            let vs: Vec<Vertex> = parse_numbers(line, l)?;
            let path = Path::from_vertices(g, &vs).map_err(|source| ParseError::Path { line, source })?;
            ps.push(path).map_err(|source| ParseError::Path { line, source })?;
        }
        if ps.len() != k {
            return Err(ParseError::Count {
                expected: k,
                found: ps.len(),
            });
        }
        Ok(ps)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.len());
        for p in self {
            let mut first = true;
            for v in p.vertices() {
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }
}
