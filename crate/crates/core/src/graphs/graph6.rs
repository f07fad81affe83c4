//! The graph6 text encoding: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable
//! byte with offset 63.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|&b| !(BIAS..=LONG).contains(&b)) {
        return Err(err(skip + pos, format!("non-printable or out-of-range byte 0x{:02x}", body[pos])));
    }
    if body.is_empty() {
        return Err(err(skip, "missing size header"));
    }

    let field = |from: usize, len: usize| -> Result<usize> {
        if body.len() < from + len {
            return Err(err(skip + body.len(), "truncated size header"));
        }
        Ok(body[from..from + len]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    let (n, start) = if body[0] != LONG {
        ((body[0] - BIAS) as usize, 1)
    } else if body.get(1) != Some(&LONG) {
        let n = field(1, 3)?;
        if n < 63 {
            return Err(err(skip, format!("long header used for order {n}")));
        }
        (n, 4)
    } else {
        let n = field(2, 6)?;
        if n < 258_048 {
            return Err(err(skip, format!("extra-long header used for order {n}")));
        }
        (n, 8)
    };
    if n == 0 {
        return Err(err(skip, "order zero"));
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        return Err(err(
            skip + start + data.len().min(expected),
            format!("expected {expected} data bytes for order {n}, found {}", data.len()),
        ));
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        let last = data[expected - 1] - BIAS;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(skip + start + expected - 1, "nonzero padding bits"));
        }
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses newline-separated graph6 lines, skipping blank lines. Error offsets
/// are relative to the whole input.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut base = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            out.push(parse_graph6(trimmed).map_err(|e| match e {
                Error::Graph6 { offset, message } => Error::Graph6 {
                    offset: base + offset,
                    message,
                },
                other => other,
            })?);
        }
        base += line.len();
    }
    Ok(out)
}
