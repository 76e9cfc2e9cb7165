//! Line-oriented edge-list format.
//!
//! Each non-comment line is `x y`; `#` starts a comment; an optional first
//! line `n <count>` fixes the vertex count (needed when trailing vertices are
//! isolated). Without a header the vertex count is 1 + the largest index.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut header_n: Option<usize> = None;
    let mut saw_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !saw_data && tokens.len() == 2 && tokens[0] == "n" {
            let count = parse_vertex(tokens[1], line_no)?;
            if count == 0 {
                return Err(Error::EdgeList {
                    line: line_no,
                    msg: "vertex count must be positive".into(),
                });
            }
            header_n = Some(count);
            saw_data = true;
            continue;
        }
        saw_data = true;
        if tokens.len() != 2 {
            return Err(Error::EdgeList {
                line: line_no,
                msg: format!("expected `x y`, found {} token(s)", tokens.len()),
            });
        }
        let x = parse_vertex(tokens[0], line_no)?;
        let y = parse_vertex(tokens[1], line_no)?;
        edges.push((x, y));
    }
    let implied = edges
        .iter()
        .map(|&(x, y)| x.max(y) + 1)
        .max()
        .unwrap_or(0);
    let n = match header_n {
        Some(h) => {
            if h < implied {
                return Err(Error::EdgeList {
                    line: 1,
                    msg: format!("header declares {h} vertices but an edge uses index {}", implied - 1),
                });
            }
            h
        }
        None => {
            if implied == 0 {
                return Err(Error::EdgeList {
                    line: 1,
                    msg: "empty edge list without an `n <count>` header".into(),
                });
            }
            implied
        }
    };
    Graph::from_edges(n, edges)
}

fn parse_vertex(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::EdgeList {
        line,
        msg: format!("`{token}` is not a nonnegative integer vertex id"),
    })
}

/// Inverse of [`parse_edge_list`]; emits a header only when the vertex count
/// cannot be recovered from the edges alone.
pub fn emit_edge_list(g: &Graph) -> String {
    let implied = g
        .unoriented_edges()
        .iter()
        .map(|&(x, y)| x.max(y) + 1)
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    if implied != g.vertex_count() {
        out.push_str(&format!("n {}\n", g.vertex_count()));
    }
    for &(x, y) in g.unoriented_edges() {
        out.push_str(&format!("{x} {y}\n"));
    }
    out
}
