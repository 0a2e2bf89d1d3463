//! graph6 / sparse6 text formats, one graph per line.
//!
//! graph6 is read and written; sparse6 is read only. The optional
//! `>>graph6<<` / `>>sparse6<<` headers are tolerated, and lines may end in
//! LF or CRLF. Parse errors carry the byte offset of the offending
//! character within the line.

use crate::graph::{Graph, GraphError, DEFAULT_MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty line")]
    EmptyLine,
    #[error("byte offset {offset}: character {byte:#04x} outside printable range 63..126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("byte offset {offset}: malformed length header")]
    BadSizeHeader { offset: usize },
    #[error("order {order} exceeds configured maximum {max}")]
    TooLarge { order: u64, max: usize },
    #[error("body truncated: need {expected} data characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("byte offset {offset}: nonzero trailing padding bits")]
    TrailingBits { offset: usize },
    #[error("byte offset {offset}: unexpected trailing characters")]
    TrailingBytes { offset: usize },
    #[error("order {order} not representable in graph6")]
    OrderNotRepresentable { order: usize },
    #[error("sparse6 line must start with ':'")]
    NotSparse6,
    #[error("sparse6 stream encodes a loop at vertex {0}")]
    Sparse6Loop(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const GRAPH6_HEADER: &str = ">>graph6<<";
const SPARSE6_HEADER: &str = ">>sparse6<<";

fn strip_line(line: &str) -> &str {
    line.trim_end_matches(['\n', '\r'])
}

/// Decode the size field N(n). Returns (order, bytes consumed).
fn decode_size(bytes: &[u8], base: usize) -> Result<(u64, usize), FormatError> {
    let get = |i: usize| -> Result<u64, FormatError> {
        let b = *bytes
            .get(i)
            .ok_or(FormatError::BadSizeHeader { offset: base + i })?;
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidChar {
                offset: base + i,
                byte: b,
            });
        }
        Ok((b - 63) as u64)
    };
    let b0 = get(0)?;
    if b0 <= 62 {
        return Ok((b0, 1));
    }
    // b0 == 63 ('~'): extended forms
    let b1 = get(1)?;
    if b1 <= 62 {
        let n = (b1 << 12) | (get(2)? << 6) | get(3)?;
        return Ok((n, 4));
    }
    // '~~': 36-bit form
    let mut n = 0u64;
    for i in 2..8 {
        n = (n << 6) | get(i)?;
    }
    Ok((n, 8))
}

/// Encode the size field with the canonical minimal-length form.
fn encode_size(n: usize, out: &mut String) -> Result<(), FormatError> {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else if (n as u64) < (1u64 << 36) {
        out.push('~');
        out.push('~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        return Err(FormatError::OrderNotRepresentable { order: n });
    }
    Ok(())
}

/// Parse a graph6 line with the default order limit.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    parse_graph6_with_limit(line, DEFAULT_MAX_ORDER)
}

pub fn parse_graph6_with_limit(line: &str, max_order: usize) -> Result<Graph, FormatError> {
    let mut s = strip_line(line);
    let mut base = 0usize;
    if let Some(rest) = s.strip_prefix(GRAPH6_HEADER) {
        s = rest;
        base = GRAPH6_HEADER.len();
    }
    if s.is_empty() {
        return Err(FormatError::EmptyLine);
    }
    let bytes = s.as_bytes();
    let (n64, consumed) = decode_size(bytes, base)?;
    if n64 > max_order as u64 {
        return Err(FormatError::TooLarge {
            order: n64,
            max: max_order,
        });
    }
    let n = n64 as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nchars = nbits.div_ceil(6);
    let body = &bytes[consumed..];
    if body.len() < nchars {
        return Err(FormatError::Truncated {
            expected: nchars,
            found: body.len(),
        });
    }
    if body.len() > nchars {
        return Err(FormatError::TrailingBytes {
            offset: base + consumed + nchars,
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let c = body[bit / 6];
            if !(63..=126).contains(&c) {
                return Err(FormatError::InvalidChar {
                    offset: base + consumed + bit / 6,
                    byte: c,
                });
            }
            let v = c - 63;
            if v >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // validate remaining characters and padding bits
    for (idx, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(FormatError::InvalidChar {
                offset: base + consumed + idx,
                byte: c,
            });
        }
    }
    if !nbits.is_multiple_of(6) && nchars > 0 {
        let last = body[nchars - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(FormatError::TrailingBits {
                offset: base + consumed + nchars - 1,
            });
        }
    }
    Ok(g)
}

/// Encode a graph as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(8 + nbits.div_ceil(6));
    encode_size(n, &mut out)?;
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parse a sparse6 line (':' prefixed) with the default order limit.
pub fn parse_sparse6(line: &str) -> Result<Graph, FormatError> {
    parse_sparse6_with_limit(line, DEFAULT_MAX_ORDER)
}

pub fn parse_sparse6_with_limit(line: &str, max_order: usize) -> Result<Graph, FormatError> {
    let mut s = strip_line(line);
    let mut base = 0usize;
    if let Some(rest) = s.strip_prefix(SPARSE6_HEADER) {
        s = rest;
        base = SPARSE6_HEADER.len();
    }
    let Some(body) = s.strip_prefix(':') else {
        return Err(FormatError::NotSparse6);
    };
    base += 1;
    if body.is_empty() {
        return Err(FormatError::EmptyLine);
    }
    let bytes = body.as_bytes();
    let (n64, consumed) = decode_size(bytes, base)?;
    if n64 > max_order as u64 {
        return Err(FormatError::TooLarge {
            order: n64,
            max: max_order,
        });
    }
    let n = n64 as usize;
    let data = &bytes[consumed..];
    for (idx, &c) in data.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(FormatError::InvalidChar {
                offset: base + consumed + idx,
                byte: c,
            });
        }
    }
    let mut g = Graph::empty(n);
    if n <= 1 {
        return Ok(g);
    }
    let k = (usize::BITS - (n - 1).leading_zeros()).max(1) as usize;
    let total_bits = data.len() * 6;
    let bit_at = |pos: usize| -> u64 { u64::from(data[pos / 6] - 63) >> (5 - pos % 6) & 1 };
    let mut pos = 0usize;
    let mut v = 0usize;
    while pos + 1 + k <= total_bits {
        let b = bit_at(pos);
        pos += 1;
        let mut x = 0usize;
        for _ in 0..k {
            x = (x << 1) | bit_at(pos) as usize;
            pos += 1;
        }
        if b == 1 {
            v += 1;
        }
        if v >= n || x >= n {
            break; // padding
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(FormatError::Sparse6Loop(v));
        } else {
            g.set_edge(x, v);
        }
    }
    Ok(g)
}

/// Parse a line in either format, dispatching on the ':' prefix / header.
pub fn parse_line(line: &str) -> Result<Graph, FormatError> {
    parse_line_with_limit(line, DEFAULT_MAX_ORDER)
}

pub fn parse_line_with_limit(line: &str, max_order: usize) -> Result<Graph, FormatError> {
    let s = strip_line(line);
    if s.starts_with(':') || s.starts_with(SPARSE6_HEADER) {
        parse_sparse6_with_limit(s, max_order)
    } else {
        parse_graph6_with_limit(s, max_order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap()
    }

    // Hand-encoded vectors per the published format definition:
    // K2: n=2 -> 'A'; one bit (0,1)=1 padded to 100000 = 32 -> '_'.
    // K3: n=3 -> 'B'; bits (0,1)(0,2)(1,2)=111 padded to 111000 = 56 -> 'w'.
    #[test]
    fn fixed_vectors() {
        assert_eq!(parse_graph6("A_").unwrap(), k(2));
        assert_eq!(parse_graph6("Bw").unwrap(), k(3));
        assert_eq!(write_graph6(&k(2)).unwrap(), "A_");
        assert_eq!(write_graph6(&k(3)).unwrap(), "Bw");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn header_and_line_endings_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<A_\r\n").unwrap(), k(2));
        assert_eq!(parse_graph6("A_\n").unwrap(), k(2));
    }

    #[test]
    fn error_offsets() {
        // 'A' promises 2 vertices, 1 data char; space (0x20) is out of range
        assert_eq!(
            parse_graph6("A "),
            Err(FormatError::InvalidChar {
                offset: 1,
                byte: 0x20
            })
        );
        assert_eq!(
            parse_graph6("A"),
            Err(FormatError::Truncated {
                expected: 1,
                found: 0
            })
        );
        // K2 body with a nonzero padding bit: 100001 = 33 -> '`'
        assert_eq!(
            parse_graph6("A`"),
            Err(FormatError::TrailingBits { offset: 1 })
        );
        assert_eq!(
            parse_graph6("A_X"),
            Err(FormatError::TrailingBytes { offset: 2 })
        );
        assert_eq!(parse_graph6(""), Err(FormatError::EmptyLine));
    }

    #[test]
    fn long_size_form() {
        // n = 63 uses the '~' three-character form
        let g = Graph::empty(63);
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn order_limit_enforced() {
        let g = Graph::empty(100);
        let s = write_graph6(&g).unwrap();
        assert_eq!(
            parse_graph6_with_limit(&s, 50),
            Err(FormatError::TooLarge {
                order: 100,
                max: 50
            })
        );
    }

    // Hand-encoded sparse6 vectors (see module tests documentation):
    // C5 -> ":DaYkN", 2K2 -> ":CfV".
    #[test]
    fn sparse6_hand_encoded() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(parse_sparse6(":DaYkN").unwrap(), c5);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(parse_sparse6(":CfV").unwrap(), two_k2);
        assert_eq!(parse_line(">>sparse6<<:CfV").unwrap(), two_k2);
        assert_eq!(parse_line("Bw").unwrap(), k(3));
    }

    #[test]
    fn roundtrip_small_exhaustive() {
        // every labeled graph on up to 5 vertices survives the round trip
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for code in 0u64..(1 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                let s = write_graph6(&g).unwrap();
                assert_eq!(parse_graph6(&s).unwrap(), g, "n={n} code={code} s={s}");
            }
        }
    }
}
