//! The `mgraph` text format and JSON report helpers.
//!
//! ```text
//! # mixed triangle
//! mgraph 3
//! e 0 2
//! a 0 1
//! a 2 1
//! ```
//!
//! Indices are 0-based. `e u v` is an undirected edge, `a u v` an arc
//! `u -> v`. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::elementary::ExactCharPoly;
use crate::graph::{GraphError, MixedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message} (at `{token}`)")]
    Syntax {
        line: usize,
        token: String,
        message: &'static str,
    },
    #[error(transparent)]
    Invariant(#[from] GraphError),
}

fn syntax(line: usize, token: &str, message: &'static str) -> ParseError {
    ParseError::Syntax {
        line,
        token: token.to_string(),
        message,
    }
}

fn index(line: usize, token: &str) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, token, "expected a non-negative integer"));
    }
    token
        .parse()
        .map_err(|_| syntax(line, token, "integer out of range"))
}

/// Parses an `mgraph` document.
pub fn parse(text: &str) -> Result<MixedGraph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim_start_matches(' ').starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = raw.split(' ').filter(|t| !t.is_empty()).collect();
        let Some((&head, rest)) = tokens.split_first() else {
            continue;
        };
        match (head, n) {
            ("mgraph", None) => match rest {
                [count] => n = Some(index(line, count)?),
                _ => return Err(syntax(line, head, "header takes exactly one count")),
            },
            ("mgraph", Some(_)) => return Err(syntax(line, head, "duplicate header")),
            (_, None) => return Err(syntax(line, head, "expected `mgraph <n>` header")),
            ("e" | "a", Some(_)) => {
                let [u, v] = rest else {
                    return Err(syntax(line, head, "expected two vertex indices"));
                };
                let pair = (index(line, u)?, index(line, v)?);
                if head == "e" {
                    edges.push(pair);
                } else {
                    arcs.push(pair);
                }
            }
            _ => return Err(syntax(line, head, "unknown record, expected `e` or `a`")),
        }
    }
    let n = n.ok_or_else(|| syntax(last_line.max(1), "", "missing `mgraph <n>` header"))?;
    Ok(MixedGraph::build(n, &edges, &arcs)?)
}

/// Writes the canonical form: header, edges by `(min, max)`, then arcs by
/// `(tail, head)`.
pub fn serialize(graph: &MixedGraph) -> String {
    let mut out = format!("mgraph {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    for (u, v) in graph.arcs() {
        let _ = writeln!(out, "a {u} {v}");
    }
    out
}

/// `"num/den"`, or just `"num"` for integers.
pub fn rational_string(r: &BigRational) -> String {
    r.to_string()
}

pub fn exact_charpoly_json(poly: &ExactCharPoly) -> Value {
    json!({
        "coefficients": poly.coefficients.iter().map(rational_string).collect::<Vec<_>>(),
    })
}
