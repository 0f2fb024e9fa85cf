//! graph6 encoding: a size header `N(n)` followed by the upper triangle of
//! the adjacency matrix in column-major order, packed six bits per byte
//! with an offset of 63 and zero padding.

use super::Graph;
use crate::{Error, Result};

const BIAS: u8 = 63;
const MAX_ORDER: usize = (1 << 36) - 1;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub(super) fn encode(g: &Graph) -> String {
    let n = g.order();
    let bit_len = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bit_len.div_ceil(6));
    push_size(&mut out, n);

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    // every byte lies in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(Error::Graph6 {
            offset,
            reason: format!("byte 0x{b:02x} outside 63..=126"),
        }),
        None => Err(Error::Graph6 {
            offset,
            reason: "unexpected end of input".into(),
        }),
    }
}

pub(super) fn decode(input: &[u8]) -> Result<Graph> {
    let bytes = input.strip_suffix(b"\n").unwrap_or(input);
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let header_skip = input.len() - bytes.len() - usize::from(input.ends_with(b"\n"));

    let fail = |offset: usize, reason: &str| Error::Graph6 {
        offset: offset + header_skip,
        reason: reason.into(),
    };
    let located = |e: Error| match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + header_skip,
            reason,
        },
        other => other,
    };

    if let Some(i) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(located(sextet(bytes, i).unwrap_err()));
    }
    let first = sextet(bytes, 0).map_err(located)?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else if bytes.get(1) == Some(&126) {
        let mut n = 0usize;
        for k in 0..6 {
            n = (n << 6) | sextet(bytes, 2 + k).map_err(located)? as usize;
        }
        if n <= 258_047 {
            return Err(fail(0, "non-minimal 8-byte size header"));
        }
        (n, 8)
    } else {
        let mut n = 0usize;
        for k in 0..3 {
            n = (n << 6) | sextet(bytes, 1 + k).map_err(located)? as usize;
        }
        if n <= 62 {
            return Err(fail(0, "non-minimal 4-byte size header"));
        }
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(fail(0, "order too large"));
    }

    let bit_len = n * n.saturating_sub(1) / 2;
    let expected = pos + bit_len.div_ceil(6);
    if bytes.len() != expected {
        let at = bytes.len().min(expected);
        return Err(fail(
            at,
            &format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let mut chunk = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                chunk = sextet(bytes, pos).map_err(located)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if chunk >> left & 1 == 1 {
                g.set_edge(i, j);
            }
        }
    }
    if left > 0 && chunk & ((1 << left) - 1) != 0 {
        return Err(fail(pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}
