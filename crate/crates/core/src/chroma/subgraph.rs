//! Subgraph search for the fixed critical patterns.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::catalog;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    K7,
    K6,
    #[serde(rename = "C11^3")]
    C11Cubed,
    #[serde(rename = "H7+K2")]
    H7K2,
    #[serde(rename = "C3+C5")]
    C3C5,
}

impl Pattern {
    /// Search order: densest first.
    pub const ALL: [Pattern; 5] = [Pattern::K7, Pattern::K6, Pattern::C11Cubed, Pattern::H7K2, Pattern::C3C5];
    pub const CRITICAL: [Pattern; 4] = [Pattern::K6, Pattern::C11Cubed, Pattern::H7K2, Pattern::C3C5];

    pub fn graph(self) -> Graph {
        match self {
            Pattern::K7 => Graph::complete(7),
            Pattern::K6 => Graph::complete(6),
            Pattern::C11Cubed => Graph::cycle_power(11, 3),
            Pattern::H7K2 => catalog::h7().join(&Graph::complete(2)),
            Pattern::C3C5 => Graph::cycle(3).join(&Graph::cycle(5)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K7 => "K7",
            Pattern::K6 => "K6",
            Pattern::C11Cubed => "C11^3",
            Pattern::H7K2 => "H7+K2",
            Pattern::C3C5 => "C3+C5",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Injective map from pattern vertices to host vertices preserving adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphMatch {
    pub pattern: Pattern,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("graph has chromatic number {0}, not 6")]
    NotSixChromatic(usize),
    #[error("classification anomaly: matched {0:?}")]
    ClassificationAnomaly(Vec<Pattern>),
}

/// Pattern vertices ordered so each one (after the first) touches an earlier one where possible.
fn search_order(p: &Graph) -> Vec<usize> {
    let n = p.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = p.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, p.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    pat: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    budget: &'a Budget,
}

impl Matcher<'_> {
    fn fits(&self, pv: usize, hv: usize) -> bool {
        !self.used[hv]
            && self.host.degree(hv) >= self.pat.degree(pv)
            && self.pat.neighbors(pv).iter().all(|&pw| self.map[pw] == usize::MAX || self.host.has_edge(hv, self.map[pw]))
    }

    fn search(&mut self, depth: usize) -> Result<bool, BudgetExceeded> {
        self.budget.tick()?;
        if depth == self.order.len() {
            return Ok(true);
        }
        let pv = self.order[depth];
        let anchor = self.pat.neighbors(pv).iter().copied().find(|&pw| self.map[pw] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(pw) => self.host.neighbors(self.map[pw]).to_vec(),
            None => (0..self.host.vertex_count()).collect(),
        };
        for hv in candidates {
            if !self.fits(pv, hv) {
                continue;
            }
            self.map[pv] = hv;
            self.used[hv] = true;
            if self.search(depth + 1)? {
                return Ok(true);
            }
            self.map[pv] = usize::MAX;
            self.used[hv] = false;
        }
        Ok(false)
    }
}

/// First subgraph (not necessarily induced) of `host` isomorphic to the pattern.
pub fn find_subgraph(host: &Graph, pattern: Pattern, budget: &Budget) -> Result<Option<SubgraphMatch>, BudgetExceeded> {
    let pat = pattern.graph();
    if pat.vertex_count() > host.vertex_count() || pat.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let mut m = Matcher {
        host,
        pat: &pat,
        order: search_order(&pat),
        map: vec![usize::MAX; pat.vertex_count()],
        used: vec![false; host.vertex_count()],
        budget,
    };
    Ok(m.search(0)?.then_some(SubgraphMatch { pattern, map: m.map }))
}

/// Which of the four 6-critical patterns the graph contains; exactly one is expected.
pub fn classify_critical(g: &Graph, budget: &Budget) -> Result<SubgraphMatch, ChromaError> {
    let mut found = Vec::new();
    for p in Pattern::CRITICAL {
        if let Some(m) = find_subgraph(g, p, budget)? {
            found.push(m);
        }
    }
    if found.len() == 1 {
        Ok(found.pop().expect("one match"))
    } else {
        Err(ChromaError::ClassificationAnomaly(found.iter().map(|m| m.pattern).collect()))
    }
}

/// As [`classify_critical`], after checking that the chromatic number is 6.
pub fn classify_six_chromatic(g: &Graph, budget: &Budget) -> Result<SubgraphMatch, ChromaError> {
    let chi = super::chromatic_number(g, budget)?;
    if chi != 6 {
        return Err(ChromaError::NotSixChromatic(chi));
    }
    classify_critical(g, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matches(host: &Graph, p: Pattern) -> Option<SubgraphMatch> {
        find_subgraph(host, p, &Budget::unlimited()).unwrap()
    }

    fn valid(host: &Graph, m: &SubgraphMatch) -> bool {
        let pat = m.pattern.graph();
        pat.edges().iter().all(|&(u, v)| host.has_edge(m.map[u], m.map[v]))
    }

    #[test]
    fn k6_in_k7_not_in_c11() {
        let k7 = Graph::complete(7);
        let m = matches(&k7, Pattern::K6).unwrap();
        assert!(valid(&k7, &m));
        assert!(matches(&Graph::cycle_power(11, 3), Pattern::K6).is_none());
    }

    #[test]
    fn pattern_sizes() {
        let sizes: Vec<(usize, usize)> =
            Pattern::ALL.iter().map(|p| (p.graph().vertex_count(), p.graph().edge_count())).collect();
        assert_eq!(sizes, vec![(7, 21), (6, 15), (11, 33), (9, 26), (8, 23)]);
    }

    #[test]
    fn k7_is_not_six_chromatic() {
        let b = Budget::unlimited();
        assert_eq!(classify_six_chromatic(&Graph::complete(7), &b), Err(ChromaError::NotSixChromatic(7)));
        let m = classify_six_chromatic(&Graph::cycle(3).join(&Graph::cycle(5)), &b).unwrap();
        assert_eq!(m.pattern, Pattern::C3C5);
    }
}
