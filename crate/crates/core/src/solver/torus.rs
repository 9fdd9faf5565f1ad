//! Case analysis for torus triangulations.
//!
//! 6-regular inputs are grids. Otherwise the chromatic number decides: at most 4 lifts a
//! vertex coloring, 7 means a K7 triangulation inside, 6 means a 6-critical subgraph,
//! and 5 falls to exhaustive search.

use std::time::Instant;

use super::altshuler::recognize_grid;
use super::critical::solve_critical;
use super::exact::solve_exact;
use super::extend::{extend_into_faces, SubEmbedding};
use super::planar::{solve_planar, tait_solve};
use super::{Method, SolveError, SolveReport, Stats, Status};
use crate::budget::{Budget, BudgetExceeded};
use crate::chroma::{chromatic_number_from, classify_critical, find_subgraph, max_clique, ChromaError, Pattern};
use crate::coloring::{EdgeColoring, PartialColoring};
use crate::embedding::Embedding;
use crate::graph::Graph;

/// Chromatic number, starting from 6 when a 6-critical pattern is present.
pub fn torus_chromatic_number(g: &Graph, budget: &Budget) -> Result<usize, BudgetExceeded> {
    let mut lower = max_clique(g).len();
    if lower < 6 {
        for p in Pattern::CRITICAL {
            if find_subgraph(g, p, budget)?.is_some() {
                lower = 6;
                break;
            }
        }
    }
    chromatic_number_from(g, lower, budget)
}

fn stats(budget: &Budget, started: Instant) -> Stats {
    Stats { nodes: budget.nodes(), millis: started.elapsed().as_millis() as u64 }
}

/// A K7 subgraph spans a 6-regular triangulation whose grid coloring extends.
pub fn solve_k7(e: &Embedding, budget: &Budget, trace: &mut Vec<String>) -> Result<EdgeColoring, SolveError> {
    let m = find_subgraph(&e.graph(), Pattern::K7, budget)?
        .ok_or_else(|| SolveError::NotApplicable("no K7 subgraph".into()))?;
    trace.push(format!("K7 at {:?}", m.map));
    let edges = Pattern::K7.graph().edges().to_vec();
    let sub = SubEmbedding::from_pattern(e, &m.map, &edges)?;
    let c = recognize_grid(&sub.embedding)?;
    extend_into_faces(e, &sub, &c, &PartialColoring::empty(e.edge_count()), budget)
}

fn critical_case(e: &Embedding, budget: &Budget, trace: &mut Vec<String>) -> Result<(Method, EdgeColoring), SolveError> {
    let m = classify_critical(&e.graph(), budget).map_err(|err| match err {
        ChromaError::Budget(b) => SolveError::Budget(b),
        ChromaError::ClassificationAnomaly(ps) => SolveError::ClassificationAnomaly(ps),
        ChromaError::NotSixChromatic(k) => SolveError::NotApplicable(format!("chromatic number {k}")),
    })?;
    let (kind, c) = solve_critical(e, &m, budget, trace)?;
    Ok((Method::Critical(kind), c))
}

/// The CRITICAL method on its own, without checking the chromatic number first.
pub fn critical_case_report(e: &Embedding, budget: &Budget) -> Result<SolveReport, SolveError> {
    if !e.is_triangulation() {
        return Err(SolveError::NotTriangulation);
    }
    let started = Instant::now();
    let mut trace = Vec::new();
    let (method, c) = critical_case(e, budget, &mut trace)?;
    Ok(SolveReport::found(method, c, stats(budget, started)).with_trace(trace))
}

fn dispatch(e: &Embedding, budget: &Budget, threads: usize, trace: &mut Vec<String>) -> Result<SolveReport, SolveError> {
    let started = Instant::now();
    if e.is_regular(6) {
        trace.push("6-regular: grid directions".into());
        let c = recognize_grid(e)?;
        return Ok(SolveReport::found(Method::Altshuler, c, stats(budget, started)));
    }
    let chi = torus_chromatic_number(&e.graph(), budget)?;
    trace.push(format!("chromatic number {chi}"));
    match chi {
        0..=4 => tait_solve(e, budget),
        7 => {
            let c = solve_k7(e, budget, trace)?;
            Ok(SolveReport::found(Method::K7, c, stats(budget, started)))
        }
        6 => {
            let (method, c) = critical_case(e, budget, trace)?;
            Ok(SolveReport::found(method, c, stats(budget, started)))
        }
        _ => {
            let r = solve_exact(e, &PartialColoring::empty(e.edge_count()), budget, threads);
            if r.status == Status::Unsat {
                trace.push("exhaustive search found no coloring".into());
            }
            Ok(r)
        }
    }
}

/// Full pipeline for genus 0 and 1. Running out of budget gives `UNKNOWN`.
pub fn solve_torus(e: &Embedding, budget: &Budget, threads: usize) -> Result<SolveReport, SolveError> {
    if !e.is_triangulation() {
        return Err(SolveError::NotTriangulation);
    }
    let started = Instant::now();
    let mut trace = Vec::new();
    let outcome = match e.genus() {
        0 => {
            trace.push("sphere: four-color and lift".into());
            solve_planar(e, budget)
        }
        1 => dispatch(e, budget, threads, &mut trace),
        g => return Err(SolveError::UnsupportedGenus(g)),
    };
    match outcome {
        Ok(r) => {
            let mut full = trace;
            full.extend(r.trace.iter().cloned());
            Ok(r.with_trace(full))
        }
        Err(SolveError::Budget(_)) => {
            trace.push("budget exhausted".into());
            Ok(SolveReport::without(Status::Unknown, None, stats(budget, started)).with_trace(trace))
        }
        Err(err) => Err(err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, fill_faces, random_refinement, K6Variant};
    use crate::coloring::verify_grunbaum;
    use crate::solver::Critical;

    fn solve(e: &Embedding) -> SolveReport {
        let r = solve_torus(e, &Budget::unlimited(), 1).unwrap();
        if r.status == Status::Found {
            assert!(verify_grunbaum(e, r.coloring.as_ref().unwrap()).unwrap().passed());
        }
        r
    }

    #[test]
    fn dispatch_by_case() {
        assert_eq!(solve(&catalog::altshuler(3, 4, 1).unwrap().embedding).method, Some(Method::Altshuler));
        assert_eq!(solve(&random_refinement(&catalog::k7(), 6, 1)).method, Some(Method::K7));
        let r = solve(&fill_faces(&catalog::k6(K6Variant::V444B)));
        assert!(matches!(r.method, Some(Method::Critical(Critical::K6(_)))));
        let r = solve(&random_refinement(&catalog::c11_cubed(), 3, 4));
        assert_eq!(r.method, Some(Method::Critical(Critical::C11Cubed)));
        assert_eq!(solve(&catalog::icosahedron()).method, Some(Method::Tait));
    }

    #[test]
    fn four_colorable_torus_uses_tait() {
        // routing to TAIT is only checked when the refinement happens to be 4-colorable
        let e = random_refinement(&catalog::altshuler(4, 4, 0).unwrap().embedding, 3, 0);
        let chi = torus_chromatic_number(&e.graph(), &Budget::unlimited()).unwrap();
        let r = solve(&e);
        assert_eq!(r.status, Status::Found);
        if chi <= 4 {
            assert_eq!(r.method, Some(Method::Tait));
        }
    }

    #[test]
    fn tiny_budget_is_unknown() {
        let e = fill_faces(&catalog::k6(K6Variant::V6));
        let r = solve_torus(&e, &Budget::new(5, None), 1).unwrap();
        assert_eq!(r.status, Status::Unknown);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(solve_torus(&catalog::k6(K6Variant::V54), &Budget::unlimited(), 1).unwrap_err(), SolveError::NotTriangulation);
    }
}
