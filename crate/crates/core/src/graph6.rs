//! graph6 encoding, restricted to the single-byte order header (p <= 62).

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid header byte {0:#04x}")]
    BadHeader(u8),
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    BadByte { byte: u8, offset: usize },
    #[error("body has {found} bytes, expected {expected}")]
    BodyLength { expected: usize, found: usize },
    #[error("nonzero padding bits in the final byte")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A trailing newline is tolerated, anything else
/// after the body is an error.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=63 + MAX_ORDER as u8).contains(&header) {
        return Err(Graph6Error::BadHeader(header));
    }
    let order = (header - 63) as usize;
    let expected = body_len(order);
    if body.len() != expected {
        return Err(Graph6Error::BodyLength { expected, found: body.len() });
    }
    let mut sextets = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { byte: b, offset: i + 1 });
        }
        sextets.push(b - 63);
    }
    let bit = |k: usize| sextets[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..order {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if sextets[k / 6] & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::new(order, edges)?)
}

/// Encodes `g` in graph6. Fails only if the order needs the long header.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let order = g.order();
    if order > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(order).into());
    }
    let mut sextets = vec![0u8; body_len(order)];
    let mut k = 0;
    for v in 1..order {
        for u in 0..v {
            if g.is_adjacent(u, v) {
                sextets[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + sextets.len());
    out.push((order as u8 + 63) as char);
    out.extend(sextets.into_iter().map(|s| (s + 63) as char));
    Ok(out)
}
