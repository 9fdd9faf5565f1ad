//! The `.gcol` text format: one `u v color` line per colored edge.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Color, EdgeColors, PartialColoring};
use crate::embedding::Embedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcolError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {u}-{v} is not an edge")]
    NotAnEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge {u}-{v} colored twice")]
    Duplicate { line: usize, u: usize, v: usize },
}

pub fn parse_gcol(e: &Embedding, text: &str) -> Result<PartialColoring, GcolError> {
    let mut c = PartialColoring::empty(e.edge_count());
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(GcolError::Syntax { line, msg: "expected `u v color`".into() });
        }
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| GcolError::Syntax { line, msg: format!("bad number `{s}`") })
        };
        let (u, v, col) = (num(fields[0])?, num(fields[1])?, num(fields[2])?);
        if col > 2 {
            return Err(GcolError::Syntax { line, msg: format!("color {col} out of range") });
        }
        let edge = (u < e.vertex_count() && v < e.vertex_count())
            .then(|| e.edge_index(u, v))
            .flatten()
            .ok_or(GcolError::NotAnEdge { line, u, v })?;
        if c.get(edge).is_some() {
            return Err(GcolError::Duplicate { line, u, v });
        }
        c.set(edge, Some(col as Color));
    }
    Ok(c)
}

/// Writes colored edges in edge order.
pub fn write_gcol<C: EdgeColors + ?Sized>(e: &Embedding, c: &C) -> String {
    let mut out = String::new();
    for (i, [u, v]) in e.edges().iter().enumerate() {
        if let Some(col) = c.color(i) {
            let _ = writeln!(out, "{u} {v} {col}");
        }
    }
    out
}
