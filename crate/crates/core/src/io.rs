//! Graph interchange formats.
//!
//! Canonical edge-list text: first line `n m`, then m lines `u v c` with
//! 0 <= u < v < n and c >= 1, ASCII decimal, single spaces, LF endings.
//! Writing sorts edges by (u, v), so canonical files round-trip
//! byte-identically. A JSON mirror `{"n": …, "edges": [[u, v, c], …]}` is
//! read and written as well; `read_graph` sniffs the format from the first
//! non-whitespace byte.

use crate::graph::{EdgeColoredGraph, GraphError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: expected `{expected}`")]
    BadShape { line: usize, expected: &'static str },
    #[error("line {line}: invalid integer `{token}`")]
    BadInteger { line: usize, token: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: endpoints must satisfy u < v (got {u} {v})")]
    UnorderedPair { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: color must be >= 1")]
    BadColor { line: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line {line}: trailing content after the declared edges")]
    TrailingContent { line: usize },
    #[error("invalid JSON graph: {0}")]
    Json(String),
}

fn parse_int(line: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::BadInteger { line, token: token.to_string() })
}

/// Parses the canonical edge-list text format with line-numbered
/// diagnostics.
pub fn parse_edge_list(text: &str) -> Result<EdgeColoredGraph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(ParseError::Empty)?;
    let head: Vec<&str> = header.split_ascii_whitespace().collect();
    if head.len() != 2 {
        return Err(ParseError::BadShape { line: 1, expected: "n m" });
    }
    let n = parse_int(1, head[0])?;
    let m = parse_int(1, head[1])?;

    let mut edges = Vec::with_capacity(m);
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(ParseError::TrailingContent { line });
        }
        let tokens: Vec<&str> = raw.split_ascii_whitespace().collect();
        if tokens.len() != 3 {
            return Err(ParseError::BadShape { line, expected: "u v c" });
        }
        let u = parse_int(line, tokens[0])?;
        let v = parse_int(line, tokens[1])?;
        let c = parse_int(line, tokens[2])?;
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if u > v {
            return Err(ParseError::UnorderedPair { line, u, v });
        }
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if c == 0 {
            return Err(ParseError::BadColor { line });
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v, c as u32));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found: edges.len() });
    }
    EdgeColoredGraph::new(n, edges).map_err(graph_error_without_line)
}

fn graph_error_without_line(e: GraphError) -> ParseError {
    // All per-edge conditions were checked with line numbers above; this
    // only fires for conditions the constructor alone can see.
    ParseError::Json(e.to_string())
}

/// Writes the canonical edge-list text, edges sorted by (u, v).
pub fn write_edge_list(g: &EdgeColoredGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v, c) in g.edges() {
        out.push_str(&format!("{u} {v} {c}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
}

/// Parses the JSON mirror format, applying the same validation as the text
/// format (element indices stand in for line numbers).
pub fn parse_json(text: &str) -> Result<EdgeColoredGraph, ParseError> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    for (idx, &(u, v, _)) in raw.edges.iter().enumerate() {
        if u >= v {
            return Err(ParseError::Json(format!("edge {idx}: endpoints must satisfy u < v")));
        }
    }
    EdgeColoredGraph::new(raw.n, raw.edges).map_err(|e| ParseError::Json(e.to_string()))
}

/// Writes the JSON mirror, edges sorted by (u, v).
pub fn write_json(g: &EdgeColoredGraph) -> String {
    let json = GraphJson {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v, c)| (u, v, c.0)).collect(),
    };
    serde_json::to_string(&json).expect("graph serializes")
}

/// Reads either format: JSON when the first non-whitespace byte is `{`,
/// the edge-list text otherwise.
pub fn read_graph(text: &str) -> Result<EdgeColoredGraph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_gk;

    #[test]
    fn parses_k2() {
        let g = parse_edge_list("2 1\n0 1 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(write_edge_list(&g), "2 1\n0 1 1\n");
    }

    #[test]
    fn self_loop_is_a_line_numbered_error() {
        assert_eq!(
            parse_edge_list("3 1\n0 0 1\n").unwrap_err(),
            ParseError::SelfLoop { line: 2, vertex: 0 }
        );
    }

    #[test]
    fn detailed_diagnostics() {
        assert_eq!(parse_edge_list("").unwrap_err(), ParseError::Empty);
        assert_eq!(
            parse_edge_list("3\n").unwrap_err(),
            ParseError::BadShape { line: 1, expected: "n m" }
        );
        assert_eq!(
            parse_edge_list("3 1\n1 0 1\n").unwrap_err(),
            ParseError::UnorderedPair { line: 2, u: 1, v: 0 }
        );
        assert_eq!(
            parse_edge_list("3 1\n0 5 1\n").unwrap_err(),
            ParseError::VertexOutOfRange { line: 2, vertex: 5, n: 3 }
        );
        assert_eq!(parse_edge_list("3 1\n0 1 0\n").unwrap_err(), ParseError::BadColor { line: 2 });
        assert_eq!(
            parse_edge_list("3 2\n0 1 1\n0 1 2\n").unwrap_err(),
            ParseError::DuplicateEdge { line: 3, u: 0, v: 1 }
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1 1\n").unwrap_err(),
            ParseError::EdgeCountMismatch { expected: 2, found: 1 }
        );
        assert_eq!(
            parse_edge_list("3 1\n0 1 1\n0 2 1\n").unwrap_err(),
            ParseError::TrailingContent { line: 3 }
        );
        assert_eq!(
            parse_edge_list("3 1\n0 x 1\n").unwrap_err(),
            ParseError::BadInteger { line: 2, token: "x".into() }
        );
    }

    #[test]
    fn golden_g2_listing() {
        let g = gen_gk(2).unwrap();
        assert_eq!(
            write_edge_list(&g),
            "4 6\n0 1 2\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 2\n"
        );
    }

    #[test]
    fn text_round_trip_is_byte_identical() {
        let g = gen_gk(3).unwrap();
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn json_mirror_round_trips() {
        let g = gen_gk(2).unwrap();
        let json = write_json(&g);
        assert_eq!(json, r#"{"n":4,"edges":[[0,1,2],[0,2,1],[0,3,1],[1,2,1],[1,3,1],[2,3,2]]}"#);
        assert_eq!(parse_json(&json).unwrap(), g);
        assert_eq!(read_graph(&json).unwrap(), g);
        assert_eq!(read_graph(&write_edge_list(&g)).unwrap(), g);
    }
}
