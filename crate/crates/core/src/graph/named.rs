//! Named graph generators with canonical vertex numbering and deterministic
//! edge order.

use super::Graph;
use crate::error::{Error, Result};

/// Builds a named graph. Accepted names:
/// `complete:N`, `complete_bipartite:A,B`, `cycle:N`, `petersen`, `cube`,
/// plus the shorthands `kN` (complete) and `kAB` (complete bipartite,
/// single-digit sides), all case-insensitive.
pub fn generate(name: &str) -> Result<Graph> {
    let lower = name.to_ascii_lowercase();
    let (base, params) = match lower.split_once(':') {
        Some((b, p)) => (b, parse_params(&lower, p)?),
        None => (lower.as_str(), Vec::new()),
    };
    match (base, params.as_slice()) {
        ("complete", [n]) => complete(*n),
        ("complete_bipartite", [a, b]) => complete_bipartite(*a, *b),
        ("cycle", [n]) => cycle(*n),
        ("petersen", []) => petersen(),
        ("cube", []) => cube(),
        ("complete" | "complete_bipartite" | "cycle", _) => Err(Error::InvalidParameter {
            name: base.to_string(),
            msg: "wrong number of parameters".into(),
        }),
        ("petersen" | "cube", _) => Err(Error::InvalidParameter {
            name: base.to_string(),
            msg: "takes no parameters".into(),
        }),
        _ => {
            if let Some(digits) = lower.strip_prefix('k') {
                if params.is_empty() && !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
                    return match digits.len() {
                        1 => complete(digits.parse().unwrap()),
                        2 => {
                            let a = digits[..1].parse().unwrap();
                            let b = digits[1..].parse().unwrap();
                            complete_bipartite(a, b)
                        }
                        _ => Err(Error::UnknownName(format!(
                            "{name} (use complete:N or complete_bipartite:A,B)"
                        ))),
                    };
                }
            }
            Err(Error::UnknownName(name.to_string()))
        }
    }
}

fn parse_params(name: &str, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| Error::InvalidParameter {
                name: name.to_string(),
                msg: format!("`{t}` is not a nonnegative integer"),
            })
        })
        .collect()
}

fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "complete".into(),
            msg: format!("needs at least 2 vertices, got {n}"),
        });
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, edges)
}

fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter {
            name: "complete_bipartite".into(),
            msg: "both sides must be nonempty".into(),
        });
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::from_edges(a + b, edges)
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "cycle".into(),
            msg: format!("needs at least 3 vertices, got {n}"),
        });
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, edges)
}

/// Outer 5-cycle 0..5, spokes to 5..10, inner pentagram.
fn petersen() -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges)
}

/// 3-dimensional hypercube on the binary labels 0..8.
fn cube() -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..8usize {
        for bit in [1usize, 2, 4] {
            let j = i ^ bit;
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(8, edges)
}
