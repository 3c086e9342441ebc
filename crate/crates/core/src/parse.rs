//! Reader for the edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v w      (exactly m lines)
//! ```
//!
//! Fields are separated by spaces or tabs. Weights are integers with
//! absolute value at most 2^31, so any tree weight fits in an `i64` exactly.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::Graph;
use crate::weight::Weight;

pub const WEIGHT_BOUND: i64 = 1 << 31;

/// Parses a graph. Connectivity is not checked here.
pub fn parse_graph(text: &str) -> Result<Graph<i64>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.strip_suffix('\r').unwrap_or(line)))
        .filter(|(_, line)| !line.starts_with('#') && !line.trim_matches([' ', '\t']).is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing \"n m\" header"))?;
    let [n, m] = fields::<2>(header_line, header)?;
    let n = count(header_line, n, "vertex count")?;
    let m = count(header_line, m, "edge count")?;
    if n == 0 {
        return Err(malformed(header_line, "vertex count must be positive"));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let Some((line, body)) = lines.next() else {
            return Err(malformed(
                text.lines().count().max(1),
                &format!("expected {m} edge lines, found {}", edges.len()),
            ));
        };
        let [u, v, w] = fields::<3>(line, body)?;
        let u = vertex(line, u, n)?;
        let v = vertex(line, v, n)?;
        if u == v {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::SelfLoop(u),
            });
        }
        edges.push((u, v, weight(line, w)?));
    }
    if let Some((line, _)) = lines.next() {
        return Err(malformed(
            line,
            &format!("more than the declared {m} edge lines"),
        ));
    }

    Ok(Graph::new(n, edges).expect("edges validated while parsing"))
}

/// Writes `g` in the format [`parse_graph`] reads.
pub fn format_graph<W: Weight>(g: &Graph<W>) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.weight);
    }
    out
}

fn malformed(line: usize, msg: &str) -> ParseError {
    ParseError {
        line,
        kind: ParseErrorKind::Malformed(msg.to_string()),
    }
}

fn fields<const N: usize>(line: usize, body: &str) -> Result<[&str; N], ParseError> {
    let tokens: Vec<&str> = body.split([' ', '\t']).filter(|t| !t.is_empty()).collect();
    tokens
        .try_into()
        .map_err(|t: Vec<&str>| malformed(line, &format!("expected {N} fields, found {}", t.len())))
}

fn is_integer(token: &str) -> bool {
    let digits = token.strip_prefix(['-', '+']).unwrap_or(token);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn count(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| {
        malformed(
            line,
            &format!("{what} {token:?} is not a nonnegative integer"),
        )
    })
}

fn vertex(line: usize, token: &str, n: usize) -> Result<usize, ParseError> {
    if !is_integer(token) {
        return Err(malformed(
            line,
            &format!("vertex {token:?} is not an integer"),
        ));
    }
    match token.parse::<usize>() {
        Ok(x) if x < n => Ok(x),
        Ok(x) => Err(ParseError {
            line,
            kind: ParseErrorKind::VertexRange { vertex: x, n },
        }),
        Err(_) if token.starts_with('-') => {
            Err(malformed(line, &format!("vertex {token:?} is negative")))
        }
        Err(_) => Err(ParseError {
            line,
            kind: ParseErrorKind::VertexRange {
                vertex: usize::MAX,
                n,
            },
        }),
    }
}

fn weight(line: usize, token: &str) -> Result<i64, ParseError> {
    if !is_integer(token) {
        return Err(malformed(
            line,
            &format!("weight {token:?} is not an integer"),
        ));
    }
    match token.parse::<i64>() {
        Ok(w) if w.abs() <= WEIGHT_BOUND => Ok(w),
        _ => Err(ParseError {
            line,
            kind: ParseErrorKind::WeightRange(token.to_string()),
        }),
    }
}
