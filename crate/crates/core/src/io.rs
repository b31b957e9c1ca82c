//! PACE-format ingestion and emission.
//!
//! Input is the `.gr` format: comment lines starting with `c`, one header
//! `p tdp <n> <m>`, then one edge per line in 1-based labels. Output is the
//! `.tree` format: the depth on the first line, then the parent of vertex
//! `i` on line `i+1`, with `0` marking a root.

use crate::graph::Graph;
use crate::solver::Decomposition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: expected header `p tdp <n> <m>`")]
    BadHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("missing header `p tdp <n> <m>`")]
    MissingHeader,
    #[error("line {line}: expected `<u> <v>`, found `{text}`")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: invalid integer `{token}`")]
    BadInteger { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("header declares {declared} edges but {found} edge lines were read")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// A parsed instance. External labels are 1-based; vertex `i` of the
/// internal graph is label `i + 1`. Duplicate edges and self-loops are
/// tolerated in the input and recorded here rather than kept.
#[derive(Debug, Clone)]
pub struct PaceInstance {
    pub n: usize,
    pub declared_edges: usize,
    /// normalized 0-based edge list (no duplicates, no self-loops)
    pub edges: Vec<(usize, usize)>,
    pub self_loops_removed: usize,
    pub duplicates_removed: usize,
}

impl PaceInstance {
    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied())
    }
}

fn parse_int(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::BadInteger {
        line,
        token: token.to_string(),
    })
}

pub fn parse_gr(text: &str) -> Result<PaceInstance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut edge_lines = 0usize;
    let mut self_loops = 0usize;
    let mut duplicates = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().unwrap();
        if first == "p" {
            if header.is_some() {
                return Err(ParseError::DuplicateHeader { line });
            }
            let kind = tokens.next();
            let n = tokens.next();
            let m = tokens.next();
            match (kind, n, m, tokens.next()) {
                (Some("tdp"), Some(n), Some(m), None) => {
                    header = Some((parse_int(n, line)?, parse_int(m, line)?));
                }
                _ => return Err(ParseError::BadHeader { line }),
            }
            continue;
        }
        let Some((n, _)) = header else {
            return Err(ParseError::MissingHeader);
        };
        let second = tokens.next();
        let (u_tok, v_tok) = match (second, tokens.next()) {
            (Some(v), None) => (first, v),
            _ => {
                return Err(ParseError::BadEdge {
                    line,
                    text: trimmed.to_string(),
                })
            }
        };
        let u = parse_int(u_tok, line)?;
        let v = parse_int(v_tok, line)?;
        for &label in &[u, v] {
            if label < 1 || label > n {
                return Err(ParseError::VertexOutOfRange {
                    line,
                    vertex: label,
                    n,
                });
            }
        }
        edge_lines += 1;
        if u == v {
            self_loops += 1;
            continue;
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            duplicates += 1;
            continue;
        }
        edges.push((key.0 - 1, key.1 - 1));
    }

    let Some((n, m)) = header else {
        return Err(ParseError::MissingHeader);
    };
    if edge_lines != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edge_lines,
        });
    }
    Ok(PaceInstance {
        n,
        declared_edges: m,
        edges,
        self_loops_removed: self_loops,
        duplicates_removed: duplicates,
    })
}

/// Serializes a full-graph decomposition: depth first, then one parent per
/// vertex in 1-based labels (`0` for roots), newline-terminated.
pub fn emit_tree(dec: &Decomposition) -> String {
    let n = dec.members().len();
    let mut out = String::with_capacity(8 * (n + 1));
    out.push_str(&dec.depth().to_string());
    out.push('\n');
    for v in 0..n {
        match dec.parent(v) {
            Some(p) => out.push_str(&(p + 1).to_string()),
            None => out.push('0'),
        }
        out.push('\n');
    }
    out
}

/// Parses a `.tree` certificate back into a decomposition over `n` vertices
/// (used by the round-trip tests and the verifier path of the CLI).
pub fn parse_tree(text: &str, n: usize) -> Option<Decomposition> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let depth: usize = lines.next()?.trim().parse().ok()?;
    let mut parent = Vec::with_capacity(n);
    for _ in 0..n {
        let p: usize = lines.next()?.trim().parse().ok()?;
        if p > n {
            return None;
        }
        parent.push(if p == 0 { None } else { Some(p - 1) });
    }
    if lines.next().is_some() {
        return None;
    }
    Some(Decomposition::new(
        crate::vset::VertexSet::full(n),
        parent,
        depth,
    ))
}
