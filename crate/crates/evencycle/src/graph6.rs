//! Bit-exact graph6 encoding and decoding.
//!
//! A short-form record is a header byte `63 + n` (`0 <= n <= 62`) followed
//! by the upper triangle of the adjacency matrix in column-major order
//! (bit `(u, v)` for `v = 1..n`, `u = 0..v`), zero-padded to a 6-bit
//! boundary, each 6-bit group emitted as `group + 63`. The long form
//! (`n >= 63`) starts with `~` and three size bytes; it is accepted only
//! through the explicit `_any` entry points since desk-scale corpora are
//! short-form.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 record: {0}")]
    MalformedRecord(String),
    #[error("graph6 record for {n} vertices exceeds the supported size {cap}")]
    UnsupportedSize { n: usize, cap: usize },
}

fn malformed(reason: impl Into<String>) -> Graph6Error {
    Graph6Error::MalformedRecord(reason.into())
}

/// Strips the optional `>>graph6<<` prefix emitted by some tools.
fn strip_prefix(record: &str) -> &str {
    record.strip_prefix(">>graph6<<").unwrap_or(record)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    match bytes.first() {
        None => Err(malformed("empty record")),
        Some(&b) if (63..=125).contains(&b) => Ok(((b - 63) as usize, 1)),
        Some(&126) => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                // 8-byte size form: n >= 258048, far over any supported cap.
                Err(Graph6Error::UnsupportedSize { n: 258_048, cap: MAX_VERTICES })
            } else if bytes.len() < 4 {
                Err(malformed("truncated long-form size"))
            } else {
                let mut n = 0usize;
                for &b in &bytes[1..4] {
                    if !(63..=126).contains(&b) {
                        return Err(malformed(format!("bad size byte {b}")));
                    }
                    n = (n << 6) | (b - 63) as usize;
                }
                Ok((n, 4))
            }
        }
        Some(&b) => Err(malformed(format!("bad header byte {b}"))),
    }
}

fn decode_body(n: usize, body: &[u8]) -> Result<Graph, Graph6Error> {
    let mut g = Graph::empty(n).map_err(|_| Graph6Error::UnsupportedSize { n, cap: MAX_VERTICES })?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() < expect {
        return Err(malformed(format!("truncated bit stream: {} of {expect} data bytes", body.len())));
    }
    if body.len() > expect {
        return Err(malformed(format!("overlong bit stream: {} of {expect} data bytes", body.len())));
    }
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(malformed(format!("bad data byte {byte}")));
            }
            let group = byte - 63;
            if group & (1 << (5 - bit % 6)) != 0 {
                g.add_edge_unchecked(u, v);
            }
            bit += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if bit % 6 != 0 {
        let byte = body[bit / 6];
        if !(63..=126).contains(&byte) {
            return Err(malformed(format!("bad data byte {byte}")));
        }
        let group = byte - 63;
        let mask = (1u8 << (6 - bit % 6)) - 1;
        if group & mask != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses one short-form graph6 record (`n <= 62`). A long-form record is
/// rejected with `UnsupportedSize`; use [`from_graph6_any`] to opt in.
pub fn from_graph6(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = strip_prefix(record.trim_end_matches(['\r', '\n'])).as_bytes();
    let (n, skip) = decode_size(bytes)?;
    if skip != 1 {
        return Err(Graph6Error::UnsupportedSize { n, cap: 62 });
    }
    decode_body(n, &bytes[skip..])
}

/// Parses a graph6 record in either short or long form, up to the vertex cap.
pub fn from_graph6_any(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = strip_prefix(record.trim_end_matches(['\r', '\n'])).as_bytes();
    let (n, skip) = decode_size(bytes)?;
    decode_body(n, &bytes[skip..])
}

fn encode_body(g: &Graph, out: &mut String) {
    let n = g.n();
    let mut group = 0u8;
    let mut fill = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            fill += 1;
            if fill == 6 {
                out.push((group + 63) as char);
                group = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        group <<= 6 - fill;
        out.push((group + 63) as char);
    }
}

/// Canonical short-form encoding; requires `n <= 62`.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    if g.n() > 62 {
        return Err(Graph6Error::UnsupportedSize { n: g.n(), cap: 62 });
    }
    let mut out = String::new();
    out.push((g.n() as u8 + 63) as char);
    encode_body(g, &mut out);
    Ok(out)
}

/// Encodes any supported graph, using the long size form once `n > 62`.
pub fn to_graph6_any(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        out.push((((n >> 12) & 63) as u8 + 63) as char);
        out.push((((n >> 6) & 63) as u8 + 63) as char);
        out.push(((n & 63) as u8 + 63) as char);
    }
    encode_body(g, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_vertex_empty_graph() {
        let g = from_graph6("D??").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(to_graph6(&Graph::empty(5).unwrap()).unwrap(), "D??");
    }

    #[test]
    fn one_vertex_graph() {
        let g = from_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(to_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn zero_vertex_graph() {
        let g = from_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(to_graph6(&g).unwrap(), "?");
    }

    // Reference records cross-checked against an independent encoder.
    #[test]
    fn known_records_decode() {
        let dqc = from_graph6("DQc").unwrap();
        assert_eq!(dqc, Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap());
        assert_eq!(to_graph6(&dqc).unwrap(), "DQc");

        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(from_graph6("Dhc").unwrap(), Graph::cycle(5));
        assert_eq!(from_graph6("IhCGGC@?G").unwrap(), Graph::path(10));
    }

    #[test]
    fn prefix_is_stripped() {
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(from_graph6(""), Err(Graph6Error::MalformedRecord(_))));
        // bad header byte (below 63)
        assert!(matches!(from_graph6("!"), Err(Graph6Error::MalformedRecord(_))));
        // truncated bit stream for n = 5
        assert!(matches!(from_graph6("D?"), Err(Graph6Error::MalformedRecord(_))));
        // overlong bit stream
        assert!(matches!(from_graph6("D???"), Err(Graph6Error::MalformedRecord(_))));
        // nonzero padding: n = 2 needs one bit, set a padding bit (group 000001)
        assert!(matches!(from_graph6("A@"), Err(Graph6Error::MalformedRecord(_))));
        // data byte out of range
        assert!(matches!(from_graph6("D?\t"), Err(Graph6Error::MalformedRecord(_))));
    }

    #[test]
    fn long_form_gated() {
        let g = Graph::empty(70).unwrap();
        let rec = to_graph6_any(&g);
        assert!(rec.starts_with('~'));
        assert!(matches!(from_graph6(&rec), Err(Graph6Error::UnsupportedSize { .. })));
        assert_eq!(from_graph6_any(&rec).unwrap(), g);
        assert!(matches!(to_graph6(&g), Err(Graph6Error::UnsupportedSize { .. })));
    }

    #[test]
    fn long_form_roundtrip_with_edges() {
        let mut edges = Vec::new();
        for i in 0..100usize {
            edges.push((i, (i + 1) % 100));
            edges.push((i, (i + 7) % 100));
        }
        let g = Graph::from_edge_list(100, &edges).unwrap();
        assert_eq!(from_graph6_any(&to_graph6_any(&g)).unwrap(), g);
    }

    #[test]
    fn oversized_record_rejected() {
        // long form declaring more vertices than the cap
        let n = MAX_VERTICES + 1;
        let rec = format!(
            "~{}{}{}",
            (((n >> 12) & 63) as u8 + 63) as char,
            (((n >> 6) & 63) as u8 + 63) as char,
            ((n & 63) as u8 + 63) as char
        );
        assert!(matches!(from_graph6_any(&rec), Err(Graph6Error::UnsupportedSize { .. })));
    }
}
