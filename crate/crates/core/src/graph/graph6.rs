//! graph6 line format.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, or as `~`
//! followed by three 6-bit groups for larger orders. The body packs the upper
//! triangle column by column (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit
//! groups, most significant bit first, each offset by 63.

use thiserror::Error;

use super::{Graph, MAX_ORDER};

/// Optional header some generators put in front of the first line.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidCharacter { offset: usize, byte: u8 },
    #[error("malformed order header")]
    BadHeader,
    #[error("graph order {0} is outside 1..=64")]
    OrderOutOfRange(usize),
    #[error("body has {found} bytes, expected {expected}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected trailing bytes")]
    TrailingGarbage(usize),
    #[error("non-zero padding bits in the last body byte")]
    NonZeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` as a graph6 line without the trailing newline.
pub fn encode(g: &Graph) -> String {
    String::from_utf8(encode_rows(g.rows())).expect("graph6 is ASCII")
}

pub(crate) fn encode_rows(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in &rows[..j] {
            acc = acc << 1 | (row >> j & 1) as u8;
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
    out
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is tolerated, as is the
/// `>>graph6<<` header.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidCharacter { offset, byte });
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.get(1) == Some(&126) {
        // 36-bit form: only used for n >= 258048
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        return Err(Graph6Error::OrderOutOfRange(n));
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage(body.len() - expected));
    }
    let bits = n * (n - 1) / 2;
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if b >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}
