//! graph6 encoding for graphs with at most 62 vertices.
//!
//! A graph6 line is one size byte (`n + 63`) followed by the upper triangle
//! of the adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte, most significant bit first, each byte offset
//! by 63. The trailing bits of the last byte must be zero.

use super::{Graph, MAX_ORDER};
use thiserror::Error;

/// Optional prefix some tools write before the first graph.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

/// Decoding failure. `offset` is the byte index in the input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: invalid size byte {byte:#04x}")]
    BadSizeByte { offset: usize, byte: u8 },
    #[error("byte {offset}: extended graph6 sizes (n > {MAX_ORDER}) are not supported")]
    UnsupportedSize { offset: usize },
    #[error("byte {offset}: graphs of order 0 are not supported")]
    ZeroOrder { offset: usize },
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range [63, 126]")]
    BadChar { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated edge data, expected {expected} data bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: unexpected trailing data")]
    TrailingData { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    NonzeroPadding { offset: usize },
    #[error("cannot encode graph of order {0} (short graph6 supports 1..={MAX_ORDER})")]
    UnsupportedOrder(usize),
}

impl Graph6Error {
    /// Byte offset of the failure within the line, when one applies.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            Graph6Error::BadSizeByte { offset, .. }
            | Graph6Error::UnsupportedSize { offset }
            | Graph6Error::ZeroOrder { offset }
            | Graph6Error::BadChar { offset, .. }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::TrailingData { offset }
            | Graph6Error::NonzeroPadding { offset } => Some(offset),
            Graph6Error::Empty | Graph6Error::UnsupportedOrder(_) => None,
        }
    }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header is stripped.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_bytes(line.as_bytes())
}

/// Byte-level decoder; accepts arbitrary input without panicking.
pub fn parse_graph6_bytes(line: &[u8]) -> Result<Graph, Graph6Error> {
    let start = if line.starts_with(HEADER.as_bytes()) {
        HEADER.len()
    } else {
        0
    };
    let body = &line[start..];
    let (&size, data) = body.split_first().ok_or(Graph6Error::Empty)?;
    match size {
        126 => return Err(Graph6Error::UnsupportedSize { offset: start }),
        BIAS => return Err(Graph6Error::ZeroOrder { offset: start }),
        b if !(BIAS..126).contains(&b) => {
            return Err(Graph6Error::BadSizeByte {
                offset: start,
                byte: b,
            })
        }
        _ => {}
    }
    let n = (size - BIAS) as usize;
    let expected = data_len(n);
    let data_start = start + 1;

    for (i, &b) in data.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Graph6Error::BadChar {
                offset: data_start + i,
                byte: b,
            });
        }
    }
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: data_start + data.len(),
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: data_start + expected,
        });
    }

    let total_bits = n * (n - 1) / 2;
    let pad = expected * 6 - total_bits;
    if pad > 0 {
        let last = data[expected - 1] - BIAS;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: data_start + expected - 1,
            });
        }
    }

    let mut g = Graph::empty(n).expect("order checked above");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.rows[i] |= 1 << j;
                g.rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
