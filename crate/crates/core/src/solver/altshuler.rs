//! 6-regular torus triangulations: color each edge by its grid direction.

use std::collections::VecDeque;
use std::time::Instant;

use super::{certify, Method, SolveError, SolveReport, Stats};
use crate::catalog::AltshulerGrid;
use crate::coloring::EdgeColoring;
use crate::embedding::Embedding;

pub fn altshuler_coloring(grid: &AltshulerGrid) -> EdgeColoring {
    grid.coloring()
}

/// Recovers the three line directions of a 6-regular torus triangulation.
///
/// At every vertex the darts in rotation positions `p` and `p + 3` continue the same
/// straight line, so a direction is `(offset(v) + p) mod 3` for a per-vertex offset. The
/// offsets are fixed by walking the graph and requiring both darts of an edge to agree.
pub fn recognize_grid(e: &Embedding) -> Result<EdgeColoring, SolveError> {
    if !e.is_regular(6) || !e.is_triangulation() || e.genus() != 1 {
        return Err(SolveError::NotAGridLabeling);
    }
    let n = e.vertex_count();
    let pos = |d: usize| e.darts_at(e.tail(d)).iter().position(|&x| x == d).expect("dart at its tail");
    let mut offset = vec![usize::MAX; n];
    offset[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &d in e.darts_at(u) {
            let v = e.head(d);
            let want = (offset[u] + pos(d) + 6 - pos(d ^ 1)) % 3;
            if offset[v] == usize::MAX {
                offset[v] = want;
                queue.push_back(v);
            } else if offset[v] != want {
                return Err(SolveError::NotAGridLabeling);
            }
        }
    }
    let colors = (0..e.edge_count()).map(|x| ((offset[e.tail(2 * x)] + pos(2 * x)) % 3) as u8).collect();
    let c = EdgeColoring::new(colors).expect("colors in range");
    certify(e, &c).map_err(|_| SolveError::NotAGridLabeling)?;
    Ok(c)
}

pub fn solve_altshuler(e: &Embedding) -> Result<SolveReport, SolveError> {
    let started = Instant::now();
    let c = recognize_grid(e)?;
    let stats = Stats { nodes: 0, millis: started.elapsed().as_millis() as u64 };
    Ok(SolveReport::found(Method::Altshuler, c, stats))
}
