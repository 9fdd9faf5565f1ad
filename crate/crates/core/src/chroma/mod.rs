//! Exact vertex coloring: chromatic numbers and k-colorings by DSATUR branch and bound.

pub mod subgraph;

pub use subgraph::{classify_critical, classify_six_chromatic, find_subgraph, ChromaError, Pattern, SubgraphMatch};

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;

/// Size of a maximum clique, with one witness.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    fn grow(g: &Graph, current: &mut Vec<usize>, cand: Vec<usize>, best: &mut Vec<usize>) {
        if current.len() + cand.len() <= best.len() {
            return;
        }
        if cand.is_empty() {
            *best = current.clone();
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if current.len() + cand.len() - i <= best.len() {
                return;
            }
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            current.push(v);
            grow(g, current, next, best);
            current.pop();
        }
    }
    let mut best = Vec::new();
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    grow(g, &mut Vec::new(), order, &mut best);
    best.sort_unstable();
    best
}

/// Repeatedly strips vertices of degree below `k`; returns the removal order.
fn peel(g: &Graph, k: usize) -> (Vec<bool>, Vec<usize>) {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        removed.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    stack.push(w);
                }
            }
        }
    }
    (alive, removed)
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    alive: &'a [bool],
    colors: Vec<Option<u8>>,
    /// `forbid[v][c]` counts colored neighbors of `v` using `c`.
    forbid: Vec<Vec<u32>>,
    live_degree: Vec<usize>,
    budget: &'a Budget,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.forbid[v].iter().filter(|&&x| x > 0).count()
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.vertex_count() {
            if !self.alive[v] || self.colors[v].is_some() {
                continue;
            }
            let key = (self.saturation(v), self.live_degree[v], v);
            let better = match best {
                None => true,
                Some((s, d, _)) => key.0 > s || (key.0 == s && key.1 > d),
            };
            if better {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn assign(&mut self, v: usize, c: Option<u8>) {
        let (old, new) = (self.colors[v], c);
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            if let Some(o) = old {
                self.forbid[w][o as usize] -= 1;
            }
            if let Some(n) = new {
                self.forbid[w][n as usize] += 1;
            }
        }
    }

    fn search(&mut self, used: usize) -> Result<bool, BudgetExceeded> {
        self.budget.tick()?;
        let Some(v) = self.pick() else { return Ok(true) };
        if self.saturation(v) == self.k {
            return Ok(false);
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbid[v][c] > 0 {
                continue;
            }
            self.assign(v, Some(c as u8));
            if self.search(used.max(c + 1))? {
                return Ok(true);
            }
            self.assign(v, None);
        }
        Ok(false)
    }
}

/// A proper coloring with colors `0..k`, if one exists.
pub fn k_coloring(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Vec<u8>>, BudgetExceeded> {
    let n = g.vertex_count();
    if k == 0 {
        return Ok((n == 0).then(Vec::new));
    }
    let (alive, removed) = peel(g, k);
    let live_degree = (0..n).map(|v| g.neighbors(v).iter().filter(|&&w| alive[w]).count()).collect();
    let mut ds = Dsatur {
        g,
        k,
        alive: &alive,
        colors: vec![None; n],
        forbid: vec![vec![0; k]; n],
        live_degree,
        budget,
    };
    if !ds.search(0)? {
        return Ok(None);
    }
    let mut colors = ds.colors;
    for &v in removed.iter().rev() {
        let mut taken = vec![false; k];
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                taken[c as usize] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).expect("peeled vertices have a free color");
        colors[v] = Some(c as u8);
    }
    Ok(Some(colors.into_iter().map(|c| c.expect("all colored")).collect()))
}

/// A proper coloring with at most four colors, or `None` if the graph needs more.
pub fn four_color_vertices(g: &Graph, budget: &Budget) -> Result<Option<Vec<u8>>, BudgetExceeded> {
    k_coloring(g, 4, budget)
}

pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<usize, BudgetExceeded> {
    chromatic_number_from(g, max_clique(g).len(), budget)
}

/// Chromatic number given a known lower bound.
pub fn chromatic_number_from(g: &Graph, lower: usize, budget: &Budget) -> Result<usize, BudgetExceeded> {
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let mut k = lower.max(1);
    loop {
        if k_coloring(g, k, budget)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

pub fn is_proper(g: &Graph, colors: &[u8]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}
