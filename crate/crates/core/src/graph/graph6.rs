//! graph6 encoding of simple graphs (printable bytes 63..=126, upper
//! triangle in column-major bit order).

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside printable range 63..=126")));
        }
    }
    let sextets: Vec<u8> = bytes.iter().map(|&b| b - OFFSET).collect();
    let (n, header_len) = decode_order(&sextets)?;
    if n == 0 {
        return Err(Error::Graph6("graph with zero vertices is not supported".into()));
    }
    let bit_count = n * (n - 1) / 2;
    let body_len = bit_count.div_ceil(6);
    if sextets.len() != header_len + body_len {
        return Err(Error::Graph6(format!(
            "expected {} byte(s) after the header for n={n}, found {}",
            body_len,
            sextets.len() - header_len
        )));
    }
    let body = &sextets[header_len..];
    let bit = |pos: usize| (body[pos / 6] >> (5 - pos % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    for extra in bit_count..body_len * 6 {
        if bit(extra) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_order(sextets: &[u8]) -> Result<(usize, usize)> {
    if sextets[0] < 63 {
        return Ok((sextets[0] as usize, 1));
    }
    // 63 encodes '~': a 3- or 6-sextet order follows
    if sextets.len() >= 2 && sextets[1] < 63 {
        if sextets.len() < 4 {
            return Err(Error::Graph6("truncated extended order".into()));
        }
        let n = ((sextets[1] as usize) << 12) | ((sextets[2] as usize) << 6) | sextets[3] as usize;
        return Ok((n, 4));
    }
    if sextets.len() < 8 {
        return Err(Error::Graph6("truncated long order".into()));
    }
    let mut n = 0usize;
    for &s in &sextets[2..8] {
        n = (n << 6) | s as usize;
    }
    Ok((n, 8))
}

/// Encodes a simple graph; errors on self-loops or multi-edges.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::InvalidInput("graph6 can only encode simple graphs".into()));
    }
    let n = g.vertex_count();
    let mut adj = vec![false; n * n];
    for &(x, y) in g.unoriented_edges() {
        adj[x * n + y] = true;
        adj[y * n + x] = true;
    }
    let mut sextets: Vec<u8> = Vec::new();
    if n <= 62 {
        sextets.push(n as u8);
    } else if n <= 258_047 {
        sextets.push(63);
        sextets.push(((n >> 12) & 63) as u8);
        sextets.push(((n >> 6) & 63) as u8);
        sextets.push((n & 63) as u8);
    } else {
        return Err(Error::InvalidInput(format!("graph too large for this encoder: n={n}")));
    }
    let header_len = sextets.len();
    let bit_count = n * (n - 1) / 2;
    sextets.resize(header_len + bit_count.div_ceil(6), 0);
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            if adj[i * n + j] {
                sextets[header_len + pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    Ok(sextets.into_iter().map(|s| (s + OFFSET) as char).collect())
}
