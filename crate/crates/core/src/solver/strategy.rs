//! Named solving strategies, selectable at run time.

use std::time::Instant;

use super::altshuler::solve_altshuler;
use super::exact::solve_exact;
use super::planar::tait_solve;
use super::torus::{critical_case_report, solve_k7, solve_torus};
use super::{Method, SolveError, SolveReport, Stats};
use crate::budget::Budget;
use crate::coloring::PartialColoring;
use crate::embedding::Embedding;

/// Run-time settings shared by every strategy.
#[derive(Debug)]
pub struct SolveContext {
    pub budget: Budget,
    pub seed: u64,
    pub threads: usize,
    /// Edge colors the result must keep; only exhaustive search honors them.
    pub fixed: Option<PartialColoring>,
}

impl Default for SolveContext {
    fn default() -> Self {
        SolveContext { budget: Budget::from_env(), seed: 0, threads: 1, fixed: None }
    }
}

pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn solve(&self, e: &Embedding, ctx: &SolveContext) -> Result<SolveReport, SolveError>;
}

struct Auto;
struct Tait;
struct Altshuler;
struct K7;
struct CriticalCase;
struct Exact;

impl Strategy for Auto {
    fn name(&self) -> &'static str {
        "auto"
    }
    fn summary(&self) -> &'static str {
        "pick the method from genus, regularity and chromatic number"
    }
    fn solve(&self, e: &Embedding, ctx: &SolveContext) -> Result<SolveReport, SolveError> {
        if ctx.fixed.is_some() {
            return Exact.solve(e, ctx);
        }
        solve_torus(e, &ctx.budget, ctx.threads)
    }
}

impl Strategy for Tait {
    fn name(&self) -> &'static str {
        "tait"
    }
    fn summary(&self) -> &'static str {
        "four-color the vertices and lift (needs chromatic number at most 4)"
    }
    fn solve(&self, e: &Embedding, ctx: &SolveContext) -> Result<SolveReport, SolveError> {
        tait_solve(e, &ctx.budget)
    }
}

impl Strategy for Altshuler {
    fn name(&self) -> &'static str {
        "altshuler"
    }
    fn summary(&self) -> &'static str {
        "color 6-regular torus triangulations by grid direction"
    }
    fn solve(&self, e: &Embedding, _ctx: &SolveContext) -> Result<SolveReport, SolveError> {
        solve_altshuler(e)
    }
}

impl Strategy for K7 {
    fn name(&self) -> &'static str {
        "k7"
    }
    fn summary(&self) -> &'static str {
        "extend the grid coloring of a K7 subgraph"
    }
    fn solve(&self, e: &Embedding, ctx: &SolveContext) -> Result<SolveReport, SolveError> {
        let started = Instant::now();
        let mut trace = Vec::new();
        let c = solve_k7(e, &ctx.budget, &mut trace)?;
        let stats = Stats { nodes: ctx.budget.nodes(), millis: started.elapsed().as_millis() as u64 };
        Ok(SolveReport::found(Method::K7, c, stats).with_trace(trace))
    }
}

impl Strategy for CriticalCase {
    fn name(&self) -> &'static str {
        "critical"
    }
    fn summary(&self) -> &'static str {
        "case tables for a 6-critical subgraph (K6, H7+K2, C3+C5, C11^3)"
    }
    fn solve(&self, e: &Embedding, ctx: &SolveContext) -> Result<SolveReport, SolveError> {
        critical_case_report(e, &ctx.budget)
    }
}

impl Strategy for Exact {
    fn name(&self) -> &'static str {
        "exact"
    }
    fn summary(&self) -> &'static str {
        "exhaustive backtracking over edge colors"
    }
    fn solve(&self, e: &Embedding, ctx: &SolveContext) -> Result<SolveReport, SolveError> {
        let empty = PartialColoring::empty(e.edge_count());
        let fixed = ctx.fixed.as_ref().unwrap_or(&empty);
        if fixed.len() != e.edge_count() {
            return Err(SolveError::NotApplicable("fixed coloring does not match the embedding".into()));
        }
        Ok(solve_exact(e, fixed, &ctx.budget, ctx.threads))
    }
}

pub struct Registry {
    strategies: Vec<Box<dyn Strategy>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry { strategies: Vec::new() }
    }

    /// Every built-in strategy, `auto` first.
    pub fn standard() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(Auto));
        r.register(Box::new(Tait));
        r.register(Box::new(Altshuler));
        r.register(Box::new(K7));
        r.register(Box::new(CriticalCase));
        r.register(Box::new(Exact));
        r
    }

    /// Adds a strategy, replacing any with the same name.
    pub fn register(&mut self, s: Box<dyn Strategy>) {
        self.strategies.retain(|x| x.name() != s.name());
        self.strategies.push(s);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Strategy> {
        let name = name.to_ascii_lowercase();
        let name = if name == "pipeline" { "auto".to_string() } else { name };
        self.strategies.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Strategy> {
        self.strategies.iter().map(|s| s.as_ref())
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::standard()
    }
}
