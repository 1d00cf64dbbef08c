//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0-based)
//! ```

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_err(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(parse_err(line_no, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

pub fn read_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, l) in lines {
        if edges.len() == m {
            return Err(parse_err(line_no, format!("more than the declared {m} edges")));
        }
        edges.push(parse_pair(line_no, l)?);
    }
    if edges.len() != m {
        let last = text.lines().count().max(1);
        return Err(parse_err(last, format!("expected {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
