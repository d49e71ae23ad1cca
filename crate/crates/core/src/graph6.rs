//! graph6 encoding: size header, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per
//! byte, most significant bit first, each byte offset by 63.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn check_byte(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = bytes[offset];
    if !(BIAS..=126).contains(&byte) {
        return Err(Graph6Error::BadByte { offset, byte });
    }
    Ok(byte - BIAS)
}

/// Decodes one graph6 line. A single trailing `\n` or `\r\n` is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(Graph6Error::TooManyVertices { n: 258048 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                offset: 1,
                expected: 3,
                found: bytes.len() - 1,
            });
        }
        let mut n = 0usize;
        for offset in 1..4 {
            n = n << 6 | check_byte(bytes, offset)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::BadHeader { offset: 0, byte: b'~' });
        }
        (n, 4)
    } else {
        let byte = bytes[0];
        if !(BIAS..=BIAS + 62).contains(&byte) {
            return Err(Graph6Error::BadHeader { offset: 0, byte });
        }
        ((byte - BIAS) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { n });
    }

    let need = body_len(n);
    let found = bytes.len() - pos;
    if found < need {
        return Err(Graph6Error::Truncated {
            offset: pos,
            expected: need,
            found,
        });
    }
    if found > need {
        return Err(Graph6Error::TrailingGarbage { offset: pos + need });
    }

    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut word = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                word = check_byte(bytes, pos)?;
                pos += 1;
            }
            if word >> (5 - bit % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if total_bits % 6 != 0 {
        let pad = 6 - total_bits % 6;
        if word & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: pos - 1 });
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric"))
}

/// Encodes `g` under its current labelling.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + BIAS);
        }
    }
    let adj = g.adjacency();
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in &adj[..j] {
            word = word << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + BIAS);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
