//! graph6 encoding and decoding.
//!
//! A graph6 line is the order followed by the upper triangle of the
//! adjacency matrix in column-major order (x01, x02, x12, x03, x13, x23,
//! ...), packed big-endian six bits per byte, each byte offset by 63, the
//! final byte zero-padded. Orders up to 62 use the single byte `63 + n`;
//! orders 63..=258047 use byte 126 followed by three bytes carrying 18 bits.
//! The longer header forms for even larger graphs are not supported.

use std::io::BufRead;

use thiserror::Error;

use crate::generate::pair_order;
use crate::graph::Graph;

/// Largest order this codec accepts (three-byte extended header).
pub const MAX_ORDER: usize = 258_047;

#[derive(Debug, Error, PartialEq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte 0x{byte:02x} at position {pos} outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("order {n} needs a line of {expected} bytes, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(u64),
    #[error("order {0} must use the single-byte header form")]
    NonCanonicalOrder(usize),
    #[error("nonzero padding bit at position {pos}")]
    NonzeroPadding { pos: usize },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error("read failed: {0}")]
    Io(String),
}

fn check_bytes(bytes: &[u8]) -> Result<(), Graph6Error> {
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { pos, byte });
        }
    }
    Ok(())
}

/// Reads the order and returns it with the header length in bytes.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    match bytes[0] {
        b if b < 126 => Ok(((b - 63) as usize, 1)),
        _ => {
            if bytes.len() < 2 {
                return Err(Graph6Error::WrongLength {
                    n: 0,
                    expected: 4,
                    got: bytes.len(),
                });
            }
            if bytes[1] == 126 {
                // eight-byte header, order >= 258048
                return Err(Graph6Error::OrderTooLarge(MAX_ORDER as u64 + 1));
            }
            if bytes.len() < 4 {
                return Err(Graph6Error::WrongLength {
                    n: 0,
                    expected: 4,
                    got: bytes.len(),
                });
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = n << 6 | (b - 63) as usize;
            }
            if n < 63 {
                return Err(Graph6Error::NonCanonicalOrder(n));
            }
            Ok((n, 4))
        }
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    check_bytes(bytes)?;
    let (n, header) = decode_order(bytes)?;
    let expected = header + body_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            got: bytes.len(),
        });
    }
    let bit = |k: usize| -> bool {
        let byte = bytes[header + k / 6] - 63;
        byte >> (5 - k % 6) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut k = 0;
    for (i, j) in pair_order(n) {
        if bit(k) {
            edges.push((i, j));
        }
        k += 1;
    }
    let total_bits = (expected - header) * 6;
    for pad in k..total_bits {
        if bit(pad) {
            return Err(Graph6Error::NonzeroPadding {
                pos: header + pad / 6,
            });
        }
    }
    Ok(Graph::build(n, &edges).unwrap())
}

/// Encodes a graph as a graph6 line.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "order {n} exceeds graph6 support");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in pair_order(n) {
        acc = acc << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(63 + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

/// Header some tools place at the start of graph6 files.
pub const FILE_HEADER: &str = ">>graph6<<";

/// Streams graphs from newline-delimited graph6 text. Blank lines are
/// skipped, an optional `>>graph6<<` prefix on the first line is tolerated,
/// and the first malformed line ends the stream with its line number.
pub struct Graph6Reader<R: BufRead> {
    lines: std::io::Lines<R>,
    line_no: usize,
    first: bool,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            lines: reader.lines(),
            line_no: 0,
            first: true,
        }
    }

    /// Line number (1-based) of the most recently yielded item.
    pub fn line_number(&self) -> usize {
        self.line_no
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, Graph6Error>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => return Some(Err(Graph6Error::Io(e.to_string()))),
            };
            self.line_no += 1;
            let mut text = line.trim_end_matches('\r');
            if self.first {
                self.first = false;
                text = text.strip_prefix(FILE_HEADER).unwrap_or(text);
            }
            if text.is_empty() {
                continue;
            }
            let line_no = self.line_no;
            return Some(decode(text).map_err(|e| Graph6Error::AtLine {
                line: line_no,
                source: Box::new(e),
            }));
        }
    }
}

/// Collects a whole stream, aborting on the first malformed line.
pub fn parse_stream(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    Graph6Reader::new(text.as_bytes()).collect()
}
