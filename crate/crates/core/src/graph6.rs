//! graph6 encoding: a size header followed by the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed into 6-bit groups biased by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted; offsets in errors are relative to the input string.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let lead = s.len() - s.trim_start().len();
    let mut body = s.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(parse_err(
            base + pos,
            format!("byte 0x{:02x} outside the graph6 range", bytes[pos]),
        ));
    }
    let Some(&first) = bytes.first() else {
        return Err(parse_err(base, "empty graph6 string"));
    };
    let (n, header_len) = if first < 126 {
        ((first - BIAS) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(base + bytes.len(), "truncated size header"));
        }
        if bytes[1] == 126 {
            return Err(parse_err(base + 1, "8-byte size headers are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 input",
            requested: n,
            limit: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            base + bytes.len().min(expected),
            format!("expected {expected} bytes for n={n}, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::new(n)?;
    let data = &bytes[header_len..];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = data[k / 6] - BIAS;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses a graph6 stream, one graph per non-blank line. Error offsets are
/// absolute within `text`.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            let g = from_graph6(line).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?;
            out.push(g);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Serde adapter storing a [`Graph`] as its graph6 string.
pub mod serde_graph6 {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let s = String::deserialize(d)?;
        super::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}
