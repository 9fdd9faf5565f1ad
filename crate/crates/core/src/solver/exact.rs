//! Exhaustive backtracking over edge colors, also used as the reference oracle.
//!
//! Edges are taken in a fixed order: faces in breadth-first order over the dual from
//! face 0, and within a face its not-yet-listed edges by id. Every triangular face other
//! than an optional exempt face must end up with three distinct colors.

use std::collections::VecDeque;
use std::time::Instant;

use rayon::prelude::*;

use super::{Method, SolveReport, Stats, Status};
use crate::budget::{Budget, BudgetExceeded};
use crate::coloring::{Color, PartialColoring};
use crate::embedding::Embedding;

const NONE: u8 = 3;

pub struct ExactSolver<'a> {
    e: &'a Embedding,
    order: Vec<usize>,
    /// For each edge, the other two edges of each constrained triangle containing it.
    partners: Vec<Vec<[usize; 2]>>,
}

impl<'a> ExactSolver<'a> {
    pub fn new(e: &'a Embedding, exempt: Option<usize>) -> Self {
        let m = e.edge_count();
        let mut partners = vec![Vec::new(); m];
        for f in 0..e.face_count() {
            let darts = e.face_darts(f);
            if Some(f) == exempt || darts.len() != 3 {
                continue;
            }
            let es = [darts[0] >> 1, darts[1] >> 1, darts[2] >> 1];
            for i in 0..3 {
                partners[es[i]].push([es[(i + 1) % 3], es[(i + 2) % 3]]);
            }
        }
        let mut order = Vec::with_capacity(m);
        let mut listed = vec![false; m];
        let mut seen = vec![false; e.face_count()];
        let mut queue = VecDeque::new();
        if e.face_count() > 0 {
            seen[0] = true;
            queue.push_back(0);
        }
        while let Some(f) = queue.pop_front() {
            let mut es: Vec<usize> = e.face_edges(f);
            es.sort_unstable();
            for x in es {
                if !listed[x] {
                    listed[x] = true;
                    order.push(x);
                }
            }
            for &d in e.face_darts(f) {
                let g = e.face_of(d ^ 1);
                if !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        ExactSolver { e, order, partners }
    }

    pub fn edge_order(&self) -> &[usize] {
        &self.order
    }

    fn allowed(&self, col: &[u8], x: usize) -> u8 {
        let mut mask = 0b111;
        for &[y, z] in &self.partners[x] {
            for w in [y, z] {
                if col[w] != NONE {
                    mask &= !(1 << col[w]);
                }
            }
        }
        mask
    }

    fn consistent(&self, col: &[u8], x: usize) -> bool {
        self.partners[x].iter().all(|&[y, z]| {
            [y, z].iter().all(|&w| col[w] != col[x] && (col[w] != NONE || self.allowed(col, w) != 0))
        })
    }

    fn start(&self, fixed: &PartialColoring) -> Option<Vec<u8>> {
        assert_eq!(fixed.len(), self.e.edge_count(), "fixed coloring must match the embedding");
        let col: Vec<u8> = fixed.as_slice().iter().map(|c| c.unwrap_or(NONE)).collect();
        let ok = (0..col.len()).all(|x| if col[x] == NONE { self.allowed(&col, x) != 0 } else { self.consistent(&col, x) });
        ok.then_some(col)
    }

    fn dfs(
        &self,
        col: &mut Vec<u8>,
        idx: usize,
        budget: &Budget,
        visit: &mut dyn FnMut(&[u8]) -> bool,
    ) -> Result<bool, BudgetExceeded> {
        let mut idx = idx;
        while idx < self.order.len() && col[self.order[idx]] != NONE {
            idx += 1;
        }
        if idx == self.order.len() {
            return Ok(visit(col));
        }
        let x = self.order[idx];
        let mask = self.allowed(col, x);
        for c in 0..3u8 {
            if mask & (1 << c) == 0 {
                continue;
            }
            budget.tick()?;
            col[x] = c;
            if self.consistent(col, x) && self.dfs(col, idx + 1, budget, visit)? {
                col[x] = NONE;
                return Ok(true);
            }
        }
        col[x] = NONE;
        Ok(false)
    }

    /// Calls `visit` on every completion of `fixed`; stops early when it returns `true`.
    pub fn for_each(
        &self,
        fixed: &PartialColoring,
        budget: &Budget,
        mut visit: impl FnMut(&PartialColoring) -> bool,
    ) -> Result<(), BudgetExceeded> {
        let Some(mut col) = self.start(fixed) else { return Ok(()) };
        let mut wrapped = |c: &[u8]| visit(&to_partial(c));
        self.dfs(&mut col, 0, budget, &mut wrapped)?;
        Ok(())
    }

    pub fn find(&self, fixed: &PartialColoring, budget: &Budget) -> Result<Option<PartialColoring>, BudgetExceeded> {
        let mut found = None;
        self.for_each(fixed, budget, |c| {
            found = Some(c.clone());
            true
        })?;
        Ok(found)
    }

    pub fn count(&self, fixed: &PartialColoring, budget: &Budget) -> Result<u64, BudgetExceeded> {
        let Some(mut col) = self.start(fixed) else { return Ok(0) };
        let mut n = 0u64;
        self.dfs(&mut col, 0, budget, &mut |_| {
            n += 1;
            false
        })?;
        Ok(n)
    }

    /// Consistent assignments of the first few free edges, used to split work.
    fn prefixes(&self, col: &[u8], want: usize, budget: &Budget) -> Result<Vec<Vec<u8>>, BudgetExceeded> {
        let mut layer = vec![col.to_vec()];
        let mut idx = 0;
        while layer.len() < want && idx < self.order.len() {
            let x = self.order[idx];
            idx += 1;
            if col[x] != NONE {
                continue;
            }
            let mut next = Vec::new();
            for p in &layer {
                let mask = self.allowed(p, x);
                for c in 0..3u8 {
                    if mask & (1 << c) != 0 {
                        budget.tick()?;
                        let mut q = p.clone();
                        q[x] = c;
                        if self.consistent(&q, x) {
                            next.push(q);
                        }
                    }
                }
            }
            layer = next;
        }
        Ok(layer)
    }

    /// As [`ExactSolver::find`], splitting the search tree across `threads` workers.
    pub fn find_parallel(
        &self,
        fixed: &PartialColoring,
        budget: &Budget,
        threads: usize,
    ) -> Result<Option<PartialColoring>, BudgetExceeded> {
        if threads <= 1 {
            return self.find(fixed, budget);
        }
        let Some(col) = self.start(fixed) else { return Ok(None) };
        let prefixes = self.prefixes(&col, 8 * threads, budget)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            let results: Vec<Result<Option<Vec<u8>>, BudgetExceeded>> = prefixes
                .into_par_iter()
                .map(|mut p| {
                    let mut hit = None;
                    self.dfs(&mut p, 0, budget, &mut |c| {
                        hit = Some(c.to_vec());
                        true
                    })?;
                    Ok(hit)
                })
                .collect();
            let mut exceeded = false;
            for r in results {
                match r {
                    Ok(Some(c)) => return Ok(Some(to_partial(&c))),
                    Ok(None) => {}
                    Err(_) => exceeded = true,
                }
            }
            if exceeded {
                Err(BudgetExceeded)
            } else {
                Ok(None)
            }
        })
    }
}

fn to_partial(col: &[u8]) -> PartialColoring {
    PartialColoring::from_options(col.iter().map(|&c| (c != NONE).then_some(c as Color)).collect())
        .expect("colors in range")
}

/// Exact search for a Grünbaum coloring extending `fixed`.
pub fn solve_exact(e: &Embedding, fixed: &PartialColoring, budget: &Budget, threads: usize) -> SolveReport {
    let started = Instant::now();
    let solver = ExactSolver::new(e, None);
    let outcome = solver.find_parallel(fixed, budget, threads);
    let stats = Stats { nodes: budget.nodes(), millis: started.elapsed().as_millis() as u64 };
    match outcome {
        Ok(Some(c)) => SolveReport::found(Method::Exact, c.to_full().expect("complete"), stats),
        Ok(None) => SolveReport::without(Status::Unsat, Some(Method::Exact), stats),
        Err(BudgetExceeded) => SolveReport::without(Status::Unknown, Some(Method::Exact), stats),
    }
}

pub fn count_colorings(e: &Embedding, fixed: &PartialColoring, budget: &Budget) -> Result<u64, BudgetExceeded> {
    ExactSolver::new(e, None).count(fixed, budget)
}
