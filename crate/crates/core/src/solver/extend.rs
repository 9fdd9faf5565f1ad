//! Carrying a coloring of a sub-embedding out to the whole host.
//!
//! Each face of the sub-embedding bounds a disk of the host. Disks inside triangular
//! faces are colored by capping them and taking a planar coloring; larger faces must be
//! supplied by the caller or fall back to exhaustive search.

use super::disk::{boundary_colors, extend_boundary};
use super::planar::solve_planar;
use super::{certify, SolveError};
use crate::budget::Budget;
use crate::coloring::{Color, EdgeColoring, PartialColoring};
use crate::embedding::{Disk, Embedding, FaceCycle, Side};

/// A subgraph of a host embedding with the induced rotation system.
#[derive(Debug, Clone)]
pub struct SubEmbedding {
    pub embedding: Embedding,
    /// Sub vertex to host vertex.
    pub vertices: Vec<usize>,
}

impl SubEmbedding {
    pub fn new(host: &Embedding, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Self, SolveError> {
        let embedding =
            host.restrict_to(vertices, edges).map_err(|e| SolveError::NotARefinement(e.to_string()))?;
        Ok(SubEmbedding { embedding, vertices: vertices.to_vec() })
    }

    /// Sub-embedding spanned by the image of a pattern graph's edges.
    pub fn from_pattern(host: &Embedding, map: &[usize], pattern_edges: &[(usize, usize)]) -> Result<Self, SolveError> {
        let edges: Vec<(usize, usize)> = pattern_edges.iter().map(|&(u, v)| (map[u], map[v])).collect();
        Self::new(host, map, &edges)
    }

    pub fn host_edge(&self, host: &Embedding, e: usize) -> usize {
        let [u, v] = self.embedding.edge(e);
        host.edge_index(self.vertices[u], self.vertices[v]).expect("sub edge lies in the host")
    }

    /// Face `f` of the sub-embedding as an oriented cycle of the host, with the face on
    /// its interior side.
    pub fn host_cycle(&self, host: &Embedding, f: usize) -> Result<FaceCycle, SolveError> {
        let vs: Vec<usize> = self.embedding.face_vertices(f).iter().map(|&v| self.vertices[v]).collect();
        FaceCycle::from_vertices(host, &vs).map_err(|e| SolveError::NotARefinement(format!("face {f}: {e}")))
    }

    pub fn face_disk(&self, host: &Embedding, f: usize) -> Result<Disk, SolveError> {
        let c = self.host_cycle(host, f)?;
        host.extract_disk(&c, Side::Interior).map_err(|e| SolveError::NotARefinement(format!("face {f}: {e}")))
    }
}

/// Permutation `p` with `p[from[i]] == to[i]` for all `i`, if one exists.
pub fn matching_permutation(from: &[Color], to: &[Color]) -> Option<[Color; 3]> {
    let mut p = [u8::MAX; 3];
    let mut used = [false; 3];
    for (&a, &b) in from.iter().zip(to) {
        if p[a as usize] == u8::MAX {
            if used[b as usize] {
                return None;
            }
            p[a as usize] = b;
            used[b as usize] = true;
        } else if p[a as usize] != b {
            return None;
        }
    }
    let mut free = (0..3).filter(|&c| !used[c as usize]);
    for x in p.iter_mut() {
        if *x == u8::MAX {
            *x = free.next().expect("a permutation has room");
        }
    }
    Some(p)
}

/// Host edge carrying disk edge `x`.
pub fn host_edge(host: &Embedding, disk: &Disk, x: usize) -> usize {
    let [u, v] = disk.embedding.edge(x);
    host.edge_index(disk.vertex_map[u], disk.vertex_map[v]).expect("disk edge lies in the host")
}

/// Writes a disk coloring into the host coloring, permuted to agree on the boundary.
pub fn transplant(host: &Embedding, disk: &Disk, c: &EdgeColoring, out: &mut PartialColoring) -> Result<(), SolveError> {
    let have = boundary_colors(disk, c);
    let want: Vec<Color> = disk
        .boundary
        .edges()
        .iter()
        .map(|&x| out.get(host_edge(host, disk, x)).ok_or_else(|| SolveError::CheckFailed("boundary edge not yet colored".into())))
        .collect::<Result<_, _>>()?;
    let perm = matching_permutation(&have, &want)
        .ok_or_else(|| SolveError::CheckFailed(format!("disk boundary {have:?} cannot be permuted to {want:?}")))?;
    for x in 0..disk.embedding.edge_count() {
        out.set(host_edge(host, disk, x), Some(perm[c.get(x) as usize]));
    }
    Ok(())
}

/// Colors the disk inside sub-face `f` given the colors already on its boundary.
fn fill_face(
    host: &Embedding,
    sub: &SubEmbedding,
    f: usize,
    out: &mut PartialColoring,
    budget: &Budget,
) -> Result<(), SolveError> {
    let disk = sub.face_disk(host, f)?;
    if (0..disk.embedding.edge_count()).all(|x| out.get(host_edge(host, &disk, x)).is_some()) {
        return Ok(());
    }
    let want: Vec<Color> = disk
        .boundary
        .edges()
        .iter()
        .map(|&x| out.get(host_edge(host, &disk, x)).expect("boundary colored"))
        .collect();
    let c = if disk.boundary.len() == 3 {
        let capped = disk.cap_with_apex();
        let r = solve_planar(&capped, budget)?;
        let full = r.coloring.expect("planar triangulations are colorable");
        let colors =
            disk.embedding.edges().iter().map(|&[u, v]| full.get(capped.edge_index(u, v).expect("edge"))).collect();
        EdgeColoring::new(colors).expect("colors in range")
    } else {
        extend_boundary(&disk, &want, budget)?
            .ok_or_else(|| SolveError::CheckFailed(format!("face {f} boundary does not extend")))?
    };
    transplant(host, &disk, &c, out)
}

/// Extends a Grünbaum coloring of `sub` to the host. `prefilled` may already color some
/// face interiors; they are kept as they are.
pub fn extend_into_faces(
    host: &Embedding,
    sub: &SubEmbedding,
    c: &EdgeColoring,
    prefilled: &PartialColoring,
    budget: &Budget,
) -> Result<EdgeColoring, SolveError> {
    if sub.embedding.genus() != host.genus() {
        return Err(SolveError::NotARefinement(format!(
            "sub-embedding has genus {}, host {}",
            sub.embedding.genus(),
            host.genus()
        )));
    }
    let mut out = prefilled.clone();
    for e in 0..sub.embedding.edge_count() {
        out.set(sub.host_edge(host, e), Some(c.get(e)));
    }
    for f in 0..sub.embedding.face_count() {
        fill_face(host, sub, f, &mut out, budget)?;
    }
    let full = out.to_full().map_err(|e| SolveError::NotARefinement(e.to_string()))?;
    certify(host, &full)?;
    Ok(full)
}
