//! Named embeddings, grid generators, refinements, and the shipped figure colorings.

pub mod corpus;
mod data;

pub use data::{
    catalog_embedding, figure, figures, induced_signatures, manifest, self_check, CatalogEmbedding, Figure, Half54,
    Manifest, QuadTable, RawTables, RowTable,
};

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::embedding::Embedding;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("grid T({0},{1},{2}) is not a simple graph")]
    NotSimple(usize, usize, usize),
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("catalog data error: {0}")]
    Data(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum K6Variant {
    V444A,
    V444B,
    V54,
    V6,
}

impl K6Variant {
    pub const ALL: [K6Variant; 4] = [K6Variant::V444A, K6Variant::V444B, K6Variant::V54, K6Variant::V6];

    pub fn name(self) -> &'static str {
        match self {
            K6Variant::V444A => "444A",
            K6Variant::V444B => "444B",
            K6Variant::V54 => "54",
            K6Variant::V6 => "6",
        }
    }

    pub fn catalog_id(self) -> &'static str {
        match self {
            K6Variant::V444A => "k6-444a",
            K6Variant::V444B => "k6-444b",
            K6Variant::V54 => "k6-54",
            K6Variant::V6 => "k6-6",
        }
    }
}

impl fmt::Display for K6Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for K6Variant {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim_start_matches("k6-").to_ascii_uppercase();
        K6Variant::ALL
            .into_iter()
            .find(|v| v.name() == t)
            .ok_or_else(|| CatalogError::UnknownId(s.to_string()))
    }
}

pub fn k6(variant: K6Variant) -> Embedding {
    catalog_embedding(variant.catalog_id()).embedding.clone()
}

pub fn octahedron() -> Embedding {
    catalog_embedding("octahedron").embedding.clone()
}

pub fn icosahedron() -> Embedding {
    catalog_embedding("icosahedron").embedding.clone()
}

pub fn k7() -> Embedding {
    catalog_embedding("k7").embedding.clone()
}

pub fn c11_cubed() -> Embedding {
    catalog_embedding("c11cubed").embedding.clone()
}

pub fn h7k2() -> Embedding {
    catalog_embedding("h7k2").embedding.clone()
}

pub fn c3c5() -> Embedding {
    catalog_embedding("c3c5").embedding.clone()
}

/// Two copies of K4 merged by one Hajós step: vertices 0..6, vertex 3 shared.
pub fn h7() -> Graph {
    Graph::from_edges(
        7,
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6), (0, 6)],
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Named {
    Embedding(Embedding),
    Graph(Graph),
}

pub const NAMES: [&str; 7] = ["H7", "H7+K2", "C3+C5", "C11^3", "K7", "octahedron", "icosahedron"];

pub fn gen_named(name: &str) -> Result<Named, CatalogError> {
    let e = match name.to_ascii_lowercase().as_str() {
        "h7" => return Ok(Named::Graph(h7())),
        "h7+k2" | "h7k2" => h7k2(),
        "c3+c5" | "c3c5" => c3c5(),
        "c11^3" | "c11cubed" | "c11" => c11_cubed(),
        "k7" => k7(),
        "octahedron" => octahedron(),
        "icosahedron" => icosahedron(),
        _ => return Err(CatalogError::UnknownId(name.to_string())),
    };
    Ok(Named::Embedding(e))
}

/// Grid role of an edge in an Altshuler grid; doubles as its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridRole {
    Horizontal,
    Vertical,
    Diagonal,
}

impl GridRole {
    pub fn color(self) -> Color {
        match self {
            GridRole::Horizontal => 0,
            GridRole::Vertical => 1,
            GridRole::Diagonal => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltshulerGrid {
    pub rows: usize,
    pub cols: usize,
    pub twist: usize,
    pub embedding: Embedding,
    /// Role of each edge, indexed by edge id.
    pub roles: Vec<GridRole>,
}

impl AltshulerGrid {
    pub fn coloring(&self) -> EdgeColoring {
        EdgeColoring::new(self.roles.iter().map(|r| r.color()).collect()).expect("colors in range")
    }
}

/// The 6-regular torus grid `T(r, c, s)`.
///
/// Vertex `(i, j)` with `0 <= i < r`, `0 <= j < c` has id `i * c + j`. Its neighbors, in
/// counterclockwise order, are `(i, j+1)`, `(i+1, j+1)`, `(i+1, j)`, `(i, j-1)`, `(i-1, j-1)`,
/// `(i-1, j)`. Columns wrap modulo `c`; stepping past the last row returns to row 0 shifted
/// `s` columns to the right (and past row 0, back to row `r - 1` shifted `s` to the left).
pub fn altshuler(rows: usize, cols: usize, twist: usize) -> Result<AltshulerGrid, CatalogError> {
    let err = CatalogError::NotSimple(rows, cols, twist);
    if rows == 0 || cols == 0 {
        return Err(err);
    }
    let (r, c) = (rows as i64, cols as i64);
    let id = |i: i64, j: i64| -> usize {
        let (mut i, mut j) = (i, j);
        if i >= r {
            i -= r;
            j += twist as i64;
        } else if i < 0 {
            i += r;
            j -= twist as i64;
        }
        (i * c + j.rem_euclid(c)) as usize
    };
    const STEPS: [(i64, i64, GridRole); 6] = [
        (0, 1, GridRole::Horizontal),
        (1, 1, GridRole::Diagonal),
        (1, 0, GridRole::Vertical),
        (0, -1, GridRole::Horizontal),
        (-1, -1, GridRole::Diagonal),
        (-1, 0, GridRole::Vertical),
    ];
    let n = rows * cols;
    let mut rotation = Vec::with_capacity(n);
    let mut role_of = std::collections::HashMap::new();
    for i in 0..r {
        for j in 0..c {
            let v = id(i, j);
            let nbrs: Vec<usize> = STEPS.iter().map(|&(di, dj, _)| id(i + di, j + dj)).collect();
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != 6 || sorted.contains(&v) {
                return Err(err);
            }
            for (&w, &(_, _, role)) in nbrs.iter().zip(STEPS.iter()) {
                let key = (v.min(w), v.max(w));
                if *role_of.entry(key).or_insert(role) != role {
                    return Err(err);
                }
            }
            rotation.push(nbrs);
        }
    }
    let embedding = Embedding::from_rotation(&rotation).map_err(|_| err.clone())?;
    if embedding.genus() != 1 || !embedding.is_triangulation() {
        return Err(err);
    }
    let roles = embedding.edges().iter().map(|&[u, v]| role_of[&(u, v)]).collect();
    Ok(AltshulerGrid { rows, cols, twist, embedding, roles })
}

/// `steps` stellations of triangular faces chosen uniformly by a seeded generator.
pub fn random_refinement(e: &Embedding, steps: usize, seed: u64) -> Embedding {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = e.clone();
    for _ in 0..steps {
        let triangles: Vec<usize> = (0..cur.face_count()).filter(|&f| cur.face_darts(f).len() == 3).collect();
        if triangles.is_empty() {
            break;
        }
        let f = triangles[rng.gen_range(0..triangles.len())];
        cur = cur.stellate_face(f).expect("triangular face");
    }
    cur
}

/// Splits vertex `v`: it keeps neighbors `rot[i..=j]` (cyclically) and a new vertex takes
/// `rot[j..=i]`; the two are joined by an edge. Both arcs need at least two neighbors.
pub fn split_vertex(e: &Embedding, v: usize, i: usize, j: usize) -> Embedding {
    let rot = e.rotation();
    let nb = &rot[v];
    let d = nb.len();
    let y = e.vertex_count();
    let arc = |from: usize, to: usize| -> Vec<usize> {
        let mut out = vec![nb[from % d]];
        let mut k = from % d;
        while k != to % d {
            k = (k + 1) % d;
            out.push(nb[k]);
        }
        out
    };
    let x_arc = arc(i, j);
    let y_arc = arc(j, i);
    let mut new = rot.clone();
    new[v] = x_arc.clone();
    new[v].push(y);
    let mut yr = y_arc.clone();
    yr.push(v);
    new.push(yr);
    let (ni, nj) = (nb[i % d], nb[j % d]);
    for &w in &y_arc[1..y_arc.len() - 1] {
        for x in new[w].iter_mut() {
            if *x == v {
                *x = y;
            }
        }
    }
    let at = new[ni].iter().position(|&x| x == v).expect("neighbor");
    new[ni].insert(at + 1, y);
    let at = new[nj].iter().position(|&x| x == v).expect("neighbor");
    new[nj].insert(at, y);
    Embedding::from_rotation(&new).expect("vertex split keeps a valid embedding")
}

/// Triangulates every non-triangular face with interior vertices only.
///
/// A face of size 4 or 5 gets an apex; a face of size 6 or more gets an apex that is then
/// split in two, so no new vertex sees the whole face.
pub fn fill_faces(e: &Embedding) -> Embedding {
    let mut cur = e.clone();
    loop {
        let Some(f) = (0..cur.face_count()).find(|&f| cur.face_darts(f).len() > 3) else {
            return cur;
        };
        let k = cur.face_darts(f).len();
        let capped = cur.cap_face(f).expect("simple face");
        cur = if k >= 6 {
            let apex = capped.vertex_count() - 1;
            split_vertex(&capped, apex, 0, k / 2)
        } else {
            capped
        };
    }
}
