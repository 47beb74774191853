//! graph6 encoding as described in the nauty format notes.
//!
//! The upper triangle is written column by column: `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`, packed six bits per byte, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and a trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (bytes, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }

    let (n, mut pos) = decode_order(bytes, base)?;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err(err(
            base + bytes.len(),
            format!("expected {needed} edge bytes for {n} vertices"),
        ));
    }
    if bytes.len() > pos + needed {
        return Err(err(base + pos + needed, "trailing bytes"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += needed;
    if bits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + pos - 1, "non-zero padding bits"));
        }
    }
    Graph::new(n, edges)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let value = |range: std::ops::Range<usize>| -> Result<usize> {
        if bytes.len() < range.end {
            return Err(err(base + bytes.len(), "truncated vertex count"));
        }
        Ok(bytes[range]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    match bytes.first() {
        None => Err(err(base, "empty input")),
        Some(126) if bytes.get(1) == Some(&126) => Ok((value(2..8)?, 8)),
        Some(126) => Ok((value(1..4)?, 4)),
        Some(&b) => Ok((usize::from(b - 63), 1)),
    }
}

/// Encodes a graph as a single graph6 line without header or newline.
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
