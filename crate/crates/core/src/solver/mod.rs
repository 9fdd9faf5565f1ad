//! Grünbaum coloring solvers and the torus case analysis.

pub mod altshuler;
pub mod critical;
pub mod disk;
pub mod exact;
pub mod extend;
pub mod planar;
pub mod strategy;
pub mod tables;
pub mod torus;

pub use altshuler::{altshuler_coloring, recognize_grid};
pub use disk::{achievable_boundaries, solve_disk, BoundaryConstraint, BoundarySignature, DiskSolution};
pub use exact::{count_colorings, solve_exact, ExactSolver};
pub use extend::{extend_into_faces, SubEmbedding};
pub use planar::solve_planar;
pub use strategy::{Registry, SolveContext, Strategy};
pub use torus::{solve_torus, torus_chromatic_number};

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::budget::BudgetExceeded;
use crate::catalog::K6Variant;
use crate::chroma::Pattern;
use crate::coloring::{verify_grunbaum, EdgeColoring};
use crate::embedding::Embedding;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Found,
    Unsat,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Found => "FOUND",
            Status::Unsat => "UNSAT",
            Status::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Critical {
    K6(K6Variant),
    H7K2,
    C3C5,
    C11Cubed,
}

impl fmt::Display for Critical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Critical::K6(v) => write!(f, "K6-{v}"),
            Critical::H7K2 => f.write_str("H7K2"),
            Critical::C3C5 => f.write_str("C3C5"),
            Critical::C11Cubed => f.write_str("C11CUBED"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Tait,
    Altshuler,
    K7,
    Critical(Critical),
    Exact,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Tait => f.write_str("TAIT"),
            Method::Altshuler => f.write_str("ALTSHULER"),
            Method::K7 => f.write_str("K7"),
            Method::Critical(c) => write!(f, "CRITICAL({c})"),
            Method::Exact => f.write_str("EXACT"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub status: Status,
    pub method: Option<Method>,
    pub coloring: Option<EdgeColoring>,
    pub stats: Stats,
    /// Steps taken, for the record.
    pub trace: Vec<String>,
}

impl SolveReport {
    pub fn found(method: Method, coloring: EdgeColoring, stats: Stats) -> Self {
        SolveReport { status: Status::Found, method: Some(method), coloring: Some(coloring), stats, trace: Vec::new() }
    }

    pub fn without(status: Status, method: Option<Method>, stats: Stats) -> Self {
        SolveReport { status, method, coloring: None, stats, trace: Vec::new() }
    }

    pub fn with_trace(mut self, trace: Vec<String>) -> Self {
        self.trace = trace;
        self
    }

    pub fn to_json(&self, e: &Embedding) -> Value {
        let mut v = json!({
            "status": self.status.to_string(),
            "method": self.method.map(|m| m.to_string()),
            "stats": { "nodes": self.stats.nodes, "millis": self.stats.millis },
        });
        if let Some(c) = &self.coloring {
            let triples: Vec<[usize; 3]> =
                e.edges().iter().enumerate().map(|(i, &[a, b])| [a, b, c.get(i) as usize]).collect();
            v["coloring"] = json!(triples);
        }
        if !self.trace.is_empty() {
            v["trace"] = json!(self.trace);
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("embedding is not a triangulation")]
    NotTriangulation,
    #[error("genus {0} is not supported (sphere and torus only)")]
    UnsupportedGenus(usize),
    #[error("method not applicable: {0}")]
    NotApplicable(String),
    #[error("embedding carries no grid labeling")]
    NotAGridLabeling,
    #[error("not a refinement: {0}")]
    NotARefinement(String),
    #[error("no case-table entry for {0}")]
    NoTableEntry(String),
    #[error("classification anomaly: matched {0:?}")]
    ClassificationAnomaly(Vec<Pattern>),
    #[error("internal check failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Re-verifies a coloring before it is reported as found.
pub(crate) fn certify(e: &Embedding, c: &EdgeColoring) -> Result<(), SolveError> {
    match verify_grunbaum(e, c) {
        Ok(r) if r.passed() => Ok(()),
        Ok(r) => Err(SolveError::CheckFailed(format!("{} violated faces", r.violations.len()))),
        Err(err) => Err(SolveError::CheckFailed(err.to_string())),
    }
}
