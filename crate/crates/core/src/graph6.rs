//! graph6 codec for graphs on at most 62 vertices.
//!
//! A record is the byte `n + 63` followed by the upper-triangle adjacency
//! bits in column order, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian into 6-bit groups (zero padded) with each group written as
//! `value + 63`.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// First byte is not in `63..=125`.
    BadLength(u8),
    /// Length prefix announces the extended (n >= 63) form.
    TooLarge,
    NonPrintable(u8),
    Truncated {
        expected: usize,
        found: usize,
    },
    TrailingGarbage,
    /// Padding bits of the last payload byte are set.
    NonZeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6: {kind} at byte {offset}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6ErrorKind::Empty => f.write_str("empty record"),
            Graph6ErrorKind::BadLength(b) => write!(f, "malformed length byte 0x{b:02x}"),
            Graph6ErrorKind::TooLarge => write!(f, "graphs above {MAX_VERTICES} vertices unsupported"),
            Graph6ErrorKind::NonPrintable(b) => write!(f, "payload byte 0x{b:02x} outside 63..=126"),
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(f, "payload truncated ({found} of {expected} bytes)")
            }
            Graph6ErrorKind::TrailingGarbage => f.write_str("trailing bytes after payload"),
            Graph6ErrorKind::NonZeroPadding => f.write_str("non-zero padding bits"),
        }
    }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. An optional `>>graph6<<` header is accepted;
/// no other surrounding bytes (including newlines) are.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    decode_bytes(text.as_bytes())
}

pub fn decode_bytes(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let start = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };
    let err = |offset, kind| Graph6Error { offset, kind };
    let body = &bytes[start..];
    let &first = body.first().ok_or(err(start, Graph6ErrorKind::Empty))?;
    match first {
        126 => return Err(err(start, Graph6ErrorKind::TooLarge)),
        63..=125 => {}
        b => return Err(err(start, Graph6ErrorKind::BadLength(b))),
    }
    let n = (first - 63) as usize;
    let expected = payload_len(n);
    let payload = &body[1..];
    for (i, &b) in payload.iter().enumerate().take(expected) {
        if !(63..=126).contains(&b) {
            return Err(err(start + 1 + i, Graph6ErrorKind::NonPrintable(b)));
        }
    }
    if payload.len() < expected {
        return Err(err(start + 1 + payload.len(), Graph6ErrorKind::Truncated { expected, found: payload.len() }));
    }
    if payload.len() > expected {
        return Err(err(start + 1 + expected, Graph6ErrorKind::TrailingGarbage));
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - total_bits;
    if pad > 0 && (payload[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(err(start + expected, Graph6ErrorKind::NonZeroPadding));
    }

    let mut g = Graph::new(n).expect("n <= 62 by length byte");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as a header-less graph6 record.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
