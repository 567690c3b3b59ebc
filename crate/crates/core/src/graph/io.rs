//! Edge-list text format.
//!
//! ```text
//! c optional comment lines
//! p semi <n> <m>
//! e <a> <b>
//! ```
//!
//! Vertices are 1-indexed in files, `a ∈ [1, n]` and `b ∈ [1, m]`. Blank
//! lines and `c` lines are ignored, LF and CRLF line endings are accepted,
//! and repeated edge lines collapse to one edge.
//!
//! Graphs produced by [`super::generate::hard_g1`] store `B₀` as B indices
//! `1..=m` and `B₁` as `m+1..=2m` in this format.

use std::path::Path;

use super::{BipartiteGraph, Edge, EdgeSubset};
use crate::error::{Error, Result};

pub fn load_graph(text: &str) -> Result<BipartiteGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.split('\n').enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate header"));
                }
                if tokens.next() != Some("semi") {
                    return Err(Error::parse(line_no, "malformed header"));
                }
                let n = int_token(tokens.next(), line_no, "malformed header")?;
                let m = int_token(tokens.next(), line_no, "malformed header")?;
                if tokens.next().is_some() {
                    return Err(Error::parse(line_no, "malformed header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, m) = header.ok_or_else(|| Error::parse(line_no, "edge before header"))?;
                let a = int_token(tokens.next(), line_no, "missing vertex index")?;
                let b = int_token(tokens.next(), line_no, "missing vertex index")?;
                if tokens.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens after edge"));
                }
                if a == 0 || a > n || b == 0 || b > m {
                    return Err(Error::parse(line_no, "vertex index out of range"));
                }
                edges.push(Edge::new(a - 1, b - 1));
            }
            Some(other) => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown line kind {other:?}"),
                ));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing header"))?;
    BipartiteGraph::new(n, m, edges)
}

fn int_token(tok: Option<&str>, line: usize, missing: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, missing))?;
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("non-integer token {tok:?}")))
}

/// Serializes every edge of `g` in stored order.
pub fn save_graph(g: &BipartiteGraph) -> String {
    write_edges(g.n(), g.m(), g.edges().iter().copied())
}

/// Serializes an edge subset as a graph document over the parent's vertex sets.
pub fn save_subset(g: &BipartiteGraph, subset: &EdgeSubset) -> String {
    write_edges(g.n(), g.m(), subset.edges(g))
}

/// Parses a document whose edges must all belong to `g`.
pub fn load_subset(g: &BipartiteGraph, text: &str) -> Result<EdgeSubset> {
    let doc = load_graph(text)?;
    if doc.n() != g.n() || doc.m() != g.m() {
        return Err(Error::InvalidArgument(format!(
            "subset header {}x{} does not match graph {}x{}",
            doc.n(),
            doc.m(),
            g.n(),
            g.m()
        )));
    }
    EdgeSubset::from_edges(g, doc.edges().iter().copied())
}

fn write_edges(n: usize, m: usize, edges: impl Iterator<Item = Edge>) -> String {
    let mut out = format!("p semi {n} {m}\n");
    for e in edges {
        out.push_str(&format!("e {} {}\n", e.a + 1, e.b + 1));
    }
    out
}

pub fn read_to_string(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<BipartiteGraph> {
    load_graph(&read_to_string(path)?)
}

pub fn write_file(path: impl AsRef<Path>, contents: &str) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}
