//! graph6 codec for graphs with at most 62 vertices.
//!
//! A record is the size byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column-major order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte, most significant bit first, each byte `+ 63`.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with a single size byte.
pub const GRAPH6_MAX_N: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!("n = {n} exceeds {GRAPH6_MAX_N}")));
    }
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let values = bytes
        .iter()
        .map(|&b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Error::Graph6(format!("byte {b} outside 63..=126")))
            }
        })
        .collect::<Result<Vec<u8>>>()?;
    let (&size, body) = values
        .split_first()
        .ok_or_else(|| Error::Graph6("empty record".into()))?;
    let n = size as usize;
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6("multi-byte size headers are not supported".into()));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            pairs.div_ceil(6),
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && body[k / 6] & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Graph::new(n, edges)
}

/// Decodes one record per nonblank line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(decode)
        .collect()
}

pub fn read_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    decode_lines(&text)
}
