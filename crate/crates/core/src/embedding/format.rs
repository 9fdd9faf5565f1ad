//! The `.emb` text format.
//!
//! ```text
//! # comment
//! vertices: 4
//! 0: 1 2 3
//! 1: 0 3 2
//! ```
//!
//! Each vertex line lists its neighbors in counterclockwise order.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Embedding, EmbeddingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `vertices:` header")]
    MissingHeader,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

pub fn parse_emb(text: &str) -> Result<Embedding, FormatError> {
    let mut rotation: Option<Vec<Option<Vec<usize>>>> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| syntax(lineno, "expected `key: values`"))?;
        let key = key.trim();
        match &mut rotation {
            None => {
                if key != "vertices" {
                    return Err(FormatError::MissingHeader);
                }
                let n: usize = rest.trim().parse().map_err(|_| syntax(lineno, "bad vertex count"))?;
                rotation = Some(vec![None; n]);
            }
            Some(rot) => {
                let v: usize = key.parse().map_err(|_| syntax(lineno, format!("bad vertex id `{key}`")))?;
                if v >= rot.len() {
                    return Err(syntax(lineno, format!("vertex {v} out of range")));
                }
                if rot[v].is_some() {
                    return Err(syntax(lineno, format!("vertex {v} listed twice")));
                }
                let nbrs = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| syntax(lineno, format!("bad neighbor `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                rot[v] = Some(nbrs);
            }
        }
    }
    let rotation: Vec<Vec<usize>> = rotation
        .ok_or(FormatError::MissingHeader)?
        .into_iter()
        .map(Option::unwrap_or_default)
        .collect();
    Ok(Embedding::from_rotation(&rotation)?)
}

pub fn write_emb(e: &Embedding) -> String {
    let mut out = format!("vertices: {}\n", e.vertex_count());
    for v in 0..e.vertex_count() {
        let _ = write!(out, "{v}:");
        for w in e.neighbors(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}
