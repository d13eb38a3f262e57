//! The graph6 encoding: a size header `N(n)` followed by the upper triangle
//! of the adjacency matrix, column by column, packed six bits per byte with
//! 63 added to each byte.

use chromabij::Graph;

use crate::ParseError;

const HEADER: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LARGE_MAX: u64 = 68_719_476_735;

fn err(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        msg: msg.into(),
    }
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u64, ParseError> {
    match bytes.get(pos) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(err(pos, format!("byte {b} is outside 63..=126"))),
        None => Err(err(pos, "header ends early")),
    }
}

/// Decodes one graph6 line; surrounding whitespace and a leading
/// `>>graph6<<` header are ignored. Edges come out in lexicographic order.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let trimmed = line.trim();
    let skip = if trimmed.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &trimmed.as_bytes()[skip..];
    if bytes.is_empty() {
        return Err(err(skip, "empty graph6 string"));
    }

    let (n, body_start) = if bytes[0] != 126 {
        (sextet(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for pos in 1..4 {
            n = n << 6 | sextet(bytes, pos)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for pos in 2..8 {
            n = n << 6 | sextet(bytes, pos)?;
        }
        (n, 8)
    };
    if n > LARGE_MAX {
        return Err(err(skip, "vertex count out of range"));
    }
    let n = n as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let body = &bytes[body_start..];
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            skip + body_start,
            format!("n = {n} needs {expected} data bytes, found {}", body.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let pos = body_start + k / 6;
            if sextet(bytes, pos).map_err(|e| shift(e, skip))? >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = expected * 6 - pairs;
        let value = sextet(bytes, body_start + expected - 1).map_err(|e| shift(e, skip))?;
        if value & ((1 << pad) - 1) != 0 {
            return Err(err(
                skip + body_start + expected - 1,
                format!("padding bits of final byte {last} are not zero"),
            ));
        }
    }
    Graph::from_edge_set(n, edges).map_err(|e| err(skip, e.to_string()))
}

fn shift(e: ParseError, by: usize) -> ParseError {
    match e {
        ParseError::Graph6 { offset, msg } => ParseError::Graph6 {
            offset: offset + by,
            msg,
        },
        other => other,
    }
}

/// Encodes `g` in graph6, without the optional header. The edge order of
/// `g` is not representable and is lost.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }

    let mut adjacent = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacent[u * n + v] = true;
    }
    let (mut acc, mut bits) = (0u8, 0);
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | adjacent[u * n + v] as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                (acc, bits) = (0, 0);
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}
