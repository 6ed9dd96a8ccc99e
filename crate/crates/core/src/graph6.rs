//! graph6 and plain edge-list text formats.
//!
//! graph6 record layout: a size field `N(n)` followed by the upper triangle of
//! the adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed big-endian into 6-bit groups, each group offset by 63. `N(n)` is one
//! byte `n + 63` for `n <= 62`, or `126` followed by three 6-bit groups for
//! `63 <= n <= 258047`. Larger graphs are not supported.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the 4-byte size field.
pub const MAX_ORDER: usize = 258_047;

const BIAS: u8 = 63;

fn err<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::Graph6(message.into()))
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return err(format!("byte {b} outside [63, 126]"));
    }
    let (n, body) = match bytes {
        [] => return err("empty record"),
        [126, 126, ..] => return err("8-byte size field (n > 258047) is not supported"),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return err("truncated size field");
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
            if n < 63 {
                return err(format!("non-canonical 4-byte size field for n = {n}"));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - BIAS), rest),
    };
    let expected = payload_len(n);
    if body.len() != expected {
        return err(format!(
            "expected {expected} payload bytes for n = {n}, found {}",
            body.len()
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - BIAS) & pad_mask != 0 {
            return err("nonzero padding bits");
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return err(format!("n = {n} exceeds {MAX_ORDER}"));
    }
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Parses every non-blank line of a graph6 corpus. An optional `>>graph6<<`
/// header on the first record is skipped.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(|line| line.strip_prefix(">>graph6<<").unwrap_or(line).trim())
        .filter(|line| !line.is_empty())
        .map(parse_graph6)
        .collect()
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `i j`
/// with 0-indexed endpoints. `#` starts a comment; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let bad = |line: usize, message: String| Error::EdgeList { line, message };
    let pair = |line: usize, content: &str| -> Result<(usize, usize)> {
        let fields: Vec<_> = content.split_whitespace().collect();
        match fields.as_slice() {
            [a, b] => match (a.parse(), b.parse()) {
                (Ok(a), Ok(b)) => Ok((a, b)),
                _ => Err(bad(
                    line,
                    format!("expected two integers, found {content:?}"),
                )),
            },
            _ => Err(bad(line, format!("expected two fields, found {content:?}"))),
        }
    };

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| bad(1, "missing header".into()))?;
    let (n, m) = pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, content) in lines {
        let (u, v) = pair(line, content)?;
        if u >= n || v >= n {
            return Err(bad(line, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(bad(line, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(bad(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.m() != m {
        return Err(bad(last_line, "duplicate edge".into()));
    }
    Ok(g)
}

/// Inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
