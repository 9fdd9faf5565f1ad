//! Kempe chains in the dual.
//!
//! Two edges colored from the pair `{a, b}` are linked when they bound a common
//! triangular face. Non-triangular faces (and an optional excluded face, such as
//! the outer face of a disk) do not link, so chains there end as paths.

use std::collections::VecDeque;

use super::{Color, ColoringError, EdgeColors};
use crate::embedding::Embedding;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeChain {
    /// Edge ids, ascending.
    pub edges: Vec<usize>,
    pub colors: (Color, Color),
    /// Every edge has a linked neighbor across both of its sides.
    pub is_cycle: bool,
}

fn links(e: &Embedding, f: usize, exclude: Option<usize>) -> bool {
    Some(f) != exclude && e.face_darts(f).len() == 3
}

pub fn kempe_chain<C: EdgeColors + ?Sized>(
    e: &Embedding,
    c: &C,
    seed: usize,
    colors: (Color, Color),
) -> Result<KempeChain, ColoringError> {
    kempe_chain_in(e, c, seed, colors, None)
}

pub fn kempe_chain_in<C: EdgeColors + ?Sized>(
    e: &Embedding,
    c: &C,
    seed: usize,
    colors: (Color, Color),
    exclude: Option<usize>,
) -> Result<KempeChain, ColoringError> {
    let (a, b) = colors;
    let in_pair = |x: Option<Color>| x == Some(a) || x == Some(b);
    if !in_pair(c.color(seed)) || a == b {
        return Err(ColoringError::SeedNotInColors(seed));
    }
    let mut seen = vec![false; e.edge_count()];
    seen[seed] = true;
    let mut queue = VecDeque::from([seed]);
    let mut edges = Vec::new();
    let mut is_cycle = true;
    while let Some(x) = queue.pop_front() {
        edges.push(x);
        for d in [2 * x, 2 * x + 1] {
            let f = e.face_of(d);
            if !links(e, f, exclude) {
                is_cycle = false;
                continue;
            }
            let partners: Vec<usize> = e
                .face_darts(f)
                .iter()
                .map(|&fd| fd >> 1)
                .filter(|&y| y != x && in_pair(c.color(y)))
                .collect();
            if partners.len() != 1 {
                is_cycle = false;
            }
            for y in partners {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(KempeChain { edges, colors, is_cycle })
}

/// Swaps the two colors along the chain through `seed`.
pub fn kempe_change<C: EdgeColors + Clone>(
    e: &Embedding,
    c: &C,
    seed: usize,
    colors: (Color, Color),
) -> Result<C, ColoringError> {
    kempe_change_in(e, c, seed, colors, None)
}

pub fn kempe_change_in<C: EdgeColors + Clone>(
    e: &Embedding,
    c: &C,
    seed: usize,
    colors: (Color, Color),
    exclude: Option<usize>,
) -> Result<C, ColoringError> {
    let chain = kempe_chain_in(e, c, seed, colors, exclude)?;
    let (a, b) = colors;
    let mut out = c.clone();
    for x in chain.edges {
        let col = c.color(x).expect("chain edges are colored");
        out.set_color(x, if col == a { b } else { a });
    }
    Ok(out)
}
