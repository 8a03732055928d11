//! graph6 codec, short form only.
//!
//! A line is one size byte `n + 63` (so `n <= 62`), followed by the upper
//! adjacency triangle read column by column, `x(0,1), x(0,2), x(1,2),
//! x(0,3), ..`, packed big-endian into 6-bit groups. Each group is offset
//! by 63 into the printable range `63..=126`. The final group is padded
//! with zero bits.
//!
//! Decoding is strict: every byte must be printable, the body must have
//! exactly the expected length, and padding bits must be zero. Graphs
//! beyond 32 vertices are rejected as unsupported.

use std::error::Error;
use std::fmt;

use crate::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

/// Errors raised while decoding a graph6 line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// The line contains no bytes.
    Empty,
    /// The size byte is outside the printable range.
    HeaderByte { byte: u8 },
    /// The declared vertex count exceeds what this crate supports.
    UnsupportedOrder { n: usize },
    /// A body byte is outside the printable range.
    BodyByte { position: usize, byte: u8 },
    /// The body length does not match the declared vertex count.
    WrongLength { expected: usize, found: usize },
    /// Padding bits in the final group are not zero.
    NonzeroPadding { byte: u8 },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 line"),
            Graph6Error::HeaderByte { byte } => {
                write!(f, "size byte {byte} outside the printable range 63..=126")
            }
            Graph6Error::UnsupportedOrder { n } => {
                write!(f, "graph on {n} vertices, at most {MAX_VERTICES} supported")
            }
            Graph6Error::BodyByte { position, byte } => {
                write!(f, "body byte {byte} at position {position} outside 63..=126")
            }
            Graph6Error::WrongLength { expected, found } => {
                write!(f, "body holds {found} bytes, expected {expected}")
            }
            Graph6Error::NonzeroPadding { byte } => {
                write!(f, "final body byte {byte} carries nonzero padding bits")
            }
        }
    }
}

impl Error for Graph6Error {}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes a graph as one graph6 line, without a trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = Vec::with_capacity(1 + if n > 0 { body_len(n) } else { 0 });
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("all bytes lie in the printable range")
}

/// Decodes one graph6 line. A single trailing newline is tolerated.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let bytes = bytes.strip_suffix(b"\r\n").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(OFFSET..=126).contains(&header) {
        return Err(Graph6Error::HeaderByte { byte: header });
    }
    if header == 126 {
        // Multi-byte size header: the graph has 63 or more vertices.
        return Err(Graph6Error::UnsupportedOrder { n: 63 });
    }
    let n = (header - OFFSET) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let expected = if n > 0 { body_len(n) } else { 0 };
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    for (position, &byte) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::BodyByte { position, byte });
        }
    }
    let mut edges = Vec::new();
    let mut c = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[c / 6] - OFFSET;
            if byte & (1 << (5 - c % 6)) != 0 {
                edges.push((i, j));
            }
            c += 1;
        }
    }
    if !c.is_multiple_of(6) {
        let last = body[body.len() - 1] - OFFSET;
        let pad = 6 - c % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                byte: body[body.len() - 1],
            });
        }
    }
    Ok(Graph::new(n, &edges).expect("validated header and body produce a legal graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k4_encodes_to_c_tilde() {
        // 6 triangle bits, all ones: 111111 + 63 = 126 = '~', header 4 + 63 = 'C'.
        let k4 = catalog::complete(4).unwrap();
        assert_eq!(encode(&k4), "C~");
        assert_eq!(decode("C~").unwrap(), k4);
    }

    #[test]
    fn k1_encodes_to_at_sign() {
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(encode(&k1), "@");
        assert_eq!(decode("@").unwrap(), k1);
    }

    #[test]
    fn empty_graph_encodes_to_question_mark() {
        let g = Graph::edgeless(0).unwrap();
        assert_eq!(encode(&g), "?");
        assert_eq!(decode("?").unwrap(), g);
    }

    #[test]
    fn hand_packed_triangle() {
        // K3: bits 111, padded to 111000 = 56, byte 56 + 63 = 119 = 'w'.
        let k3 = catalog::complete(3).unwrap();
        assert_eq!(encode(&k3), "Bw");
        // P3 as 0-1-2: bits x01 x02 x12 = 101, padded 101000 = 40 -> 'g'.
        let p3 = catalog::path(3).unwrap();
        assert_eq!(encode(&p3), "Bg");
    }

    #[test]
    fn trailing_newline_is_tolerated() {
        let k4 = catalog::complete(4).unwrap();
        assert_eq!(decode("C~\n").unwrap(), k4);
        assert_eq!(decode("C~\r\n").unwrap(), k4);
    }

    #[test]
    fn round_trip_10000_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(6363);
        for _ in 0..10_000 {
            let n = rng.gen_range(0..=16);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let line = encode(&g);
            assert_eq!(decode(&line).unwrap(), g, "line {line:?}");
        }
    }

    #[test]
    fn round_trip_at_capacity() {
        let k32 = catalog::complete(32).unwrap();
        assert_eq!(decode(&encode(&k32)).unwrap(), k32);
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        // size byte below the printable range
        assert_eq!(decode("\u{20}"), Err(Graph6Error::HeaderByte { byte: 0x20 }));
        // declared 33 vertices: 33 + 63 = 96 = '`'
        assert!(matches!(
            decode("`"),
            Err(Graph6Error::UnsupportedOrder { n: 33 })
        ));
        // multi-byte header form
        assert!(matches!(
            decode("~??"),
            Err(Graph6Error::UnsupportedOrder { .. })
        ));
        // K4 with a truncated body
        assert_eq!(
            decode("C"),
            Err(Graph6Error::WrongLength {
                expected: 1,
                found: 0
            })
        );
        // K4 with trailing garbage
        assert_eq!(
            decode("C~~"),
            Err(Graph6Error::WrongLength {
                expected: 1,
                found: 2
            })
        );
        // body byte outside the range
        assert!(matches!(decode("C:"), Err(Graph6Error::BodyByte { .. })));
        // nonzero padding: n = 3 has 3 data bits and 3 padding bits
        assert!(matches!(
            decode("B~"),
            Err(Graph6Error::NonzeroPadding { .. })
        ));
    }
}
