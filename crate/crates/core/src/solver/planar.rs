use std::time::Instant;

use super::{certify, Method, SolveError, SolveReport, Stats};
use crate::budget::Budget;
use crate::chroma::four_color_vertices;
use crate::coloring::tait_lift;
use crate::embedding::Embedding;

/// Four-colors the vertices and lifts to edges; works on any surface when χ ≤ 4.
pub fn tait_solve(e: &Embedding, budget: &Budget) -> Result<SolveReport, SolveError> {
    if !e.is_triangulation() {
        return Err(SolveError::NotTriangulation);
    }
    let started = Instant::now();
    let vc = four_color_vertices(&e.graph(), budget)?
        .ok_or_else(|| SolveError::NotApplicable("graph is not 4-colorable".into()))?;
    let c = tait_lift(e, &vc).map_err(|err| SolveError::CheckFailed(err.to_string()))?;
    certify(e, &c)?;
    let stats = Stats { nodes: budget.nodes(), millis: started.elapsed().as_millis() as u64 };
    Ok(SolveReport::found(Method::Tait, c, stats))
}

/// Planar triangulations: always 4-colorable, so always found within budget.
pub fn solve_planar(e: &Embedding, budget: &Budget) -> Result<SolveReport, SolveError> {
    if e.genus() != 0 {
        return Err(SolveError::UnsupportedGenus(e.genus()));
    }
    tait_solve(e, budget)
}
