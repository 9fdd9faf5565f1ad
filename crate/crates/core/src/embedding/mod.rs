//! Rotation systems over darts.
//!
//! Edges are numbered by sorting their endpoint pairs `(u, v)` with `u < v`.
//! Edge `e` owns darts `2e` (u→v) and `2e + 1` (v→u), so `twin(d) = d ^ 1`.
//! Faces are traced with `next(d) = succ(twin(d))`, where `succ` is the
//! counterclockwise successor in the rotation at the dart's tail.

pub mod format;
pub mod iso;
mod surgery;

pub use surgery::{Disk, SeparationReport, Side};

use std::collections::VecDeque;
use thiserror::Error;

use crate::graph::Graph;

pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("{1} appears in the rotation of {0} but not {0} in the rotation of {1}")]
    AsymmetricAdjacency(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("embedding has no vertices")]
    Empty,
    #[error("face {0} is not a triangle")]
    FaceNotTriangle(usize),
    #[error("walk is not a simple cycle of the embedding")]
    NotACycle,
    #[error("chosen side of the cycle is not a disk")]
    SideNotADisk,
}

/// Partition of darts into face cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn darts(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Dart]> {
        self.faces.iter().map(|f| f.as_slice())
    }

    /// Face sizes, largest first.
    pub fn census(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.faces.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// An orientable embedded simple connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    edges: Vec<[usize; 2]>,
    rot: Vec<Vec<Dart>>,
    pos: Vec<usize>,
    faces: FaceSet,
}

impl Embedding {
    /// Builds an embedding from counterclockwise neighbor lists.
    pub fn from_rotation(rotation: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        let n = rotation.len();
        if n == 0 {
            return Err(EmbeddingError::Empty);
        }
        let mut edges = Vec::new();
        for (u, nbrs) in rotation.iter().enumerate() {
            let mut seen = nbrs.clone();
            seen.sort_unstable();
            for w in seen.windows(2) {
                if w[0] == w[1] {
                    return Err(EmbeddingError::ParallelEdge(u, w[0]));
                }
            }
            for &v in nbrs {
                if v >= n {
                    return Err(EmbeddingError::VertexOutOfRange(v));
                }
                if v == u {
                    return Err(EmbeddingError::LoopEdge(u));
                }
                if !rotation[v].contains(&u) {
                    return Err(EmbeddingError::AsymmetricAdjacency(u, v));
                }
                if u < v {
                    edges.push([u, v]);
                }
            }
        }
        edges.sort_unstable();
        let dart_of = |u: usize, v: usize| -> Dart {
            let key = [u.min(v), u.max(v)];
            let e = edges.binary_search(&key).expect("edge present");
            2 * e + usize::from(u > v)
        };
        let mut pos = vec![0; 2 * edges.len()];
        let rot: Vec<Vec<Dart>> = rotation
            .iter()
            .enumerate()
            .map(|(u, nbrs)| {
                nbrs.iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let d = dart_of(u, v);
                        pos[d] = i;
                        d
                    })
                    .collect()
            })
            .collect();
        let mut emb = Embedding {
            edges,
            rot,
            pos,
            faces: FaceSet { faces: Vec::new(), face_of: Vec::new() },
        };
        if !emb.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        emb.faces = emb.compute_faces();
        Ok(emb)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    fn compute_faces(&self) -> FaceSet {
        let darts = self.dart_count();
        let mut face_of = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                cycle.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            faces.push(cycle);
        }
        FaceSet { faces, face_of }
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&[u.min(v), u.max(v)]).ok()
    }

    /// Dart from `u` to `v`, if the edge exists.
    pub fn dart(&self, u: usize, v: usize) -> Option<Dart> {
        self.edge_index(u, v).map(|e| 2 * e + usize::from(u > v))
    }

    pub fn twin(&self, d: Dart) -> Dart {
        d ^ 1
    }

    pub fn edge_of(&self, d: Dart) -> usize {
        d >> 1
    }

    pub fn tail(&self, d: Dart) -> usize {
        self.edges[d >> 1][d & 1]
    }

    pub fn head(&self, d: Dart) -> usize {
        self.edges[d >> 1][1 - (d & 1)]
    }

    /// Counterclockwise successor of `d` around its tail.
    pub fn succ(&self, d: Dart) -> Dart {
        let r = &self.rot[self.tail(d)];
        r[(self.pos[d] + 1) % r.len()]
    }

    /// Clockwise successor of `d` around its tail.
    pub fn pred(&self, d: Dart) -> Dart {
        let r = &self.rot[self.tail(d)];
        r[(self.pos[d] + r.len() - 1) % r.len()]
    }

    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.succ(d ^ 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn darts_at(&self, v: usize) -> &[Dart] {
        &self.rot[v]
    }

    /// Neighbors of `v` in counterclockwise order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rot[v].iter().map(move |&d| self.head(d))
    }

    pub fn rotation(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.neighbors(v).collect()).collect()
    }

    /// The same map with every rotation reversed. Edge ids are unchanged.
    pub fn mirrored(&self) -> Embedding {
        let rot: Vec<Vec<usize>> = self.rotation().into_iter().map(|r| r.into_iter().rev().collect()).collect();
        Embedding::from_rotation(&rot).expect("mirror of a valid rotation system")
    }

    /// Keeps only the listed edges (given by endpoints), in the induced rotation order.
    pub fn restrict_to(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Embedding, EmbeddingError> {
        let mut id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            id[v] = i;
        }
        let mut keep = std::collections::HashSet::new();
        for &(u, v) in edges {
            keep.insert((u.min(v), u.max(v)));
        }
        let rotation: Vec<Vec<usize>> = vertices
            .iter()
            .map(|&v| self.neighbors(v).filter(|&w| keep.contains(&(v.min(w), v.max(w)))).map(|w| id[w]).collect())
            .collect();
        if rotation.iter().flatten().any(|&w| w == usize::MAX) {
            return Err(EmbeddingError::Disconnected);
        }
        Embedding::from_rotation(&rotation)
    }

    pub fn trace_faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.faces.face_of[d]
    }

    pub fn face_darts(&self, f: usize) -> &[Dart] {
        &self.faces.faces[f]
    }

    /// Vertices around face `f`, starting at the tail of its minimal dart.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces.faces[f].iter().map(|&d| self.tail(d)).collect()
    }

    pub fn face_edges(&self, f: usize) -> Vec<usize> {
        self.faces.faces[f].iter().map(|&d| d >> 1).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && chi % 2 == 0, "orientable maps have even characteristic");
        ((2 - chi) / 2) as usize
    }

    pub fn is_triangulation(&self) -> bool {
        self.faces.faces.iter().all(|f| f.len() == 3)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.rot.iter().all(|r| r.len() == k)
    }

    pub fn dual_graph(&self) -> DualGraph {
        let ends = (0..self.edge_count())
            .map(|e| [self.face_of(2 * e), self.face_of(2 * e + 1)])
            .collect();
        let incident = self.faces.faces.iter().map(|f| f.iter().map(|&d| d >> 1).collect()).collect();
        DualGraph { ends, incident }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.vertex_count(), self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

/// Face adjacency structure. Dual edge `e` corresponds to host edge `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    ends: Vec<[usize; 2]>,
    incident: Vec<Vec<usize>>,
}

impl DualGraph {
    pub fn node_count(&self) -> usize {
        self.incident.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    /// Faces on the two sides of host edge `e` (left of dart `2e`, then left of `2e + 1`).
    pub fn ends(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }

    /// Host edges bounding face `f`, in face order.
    pub fn incident(&self, f: usize) -> &[usize] {
        &self.incident[f]
    }

    pub fn degree(&self, f: usize) -> usize {
        self.incident[f].len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(f) = stack.pop() {
            for &e in &self.incident[f] {
                for g in self.ends[e] {
                    if !seen[g] {
                        seen[g] = true;
                        stack.push(g);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// An oriented closed walk given by its darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCycle {
    darts: Vec<Dart>,
}

impl FaceCycle {
    /// Cycle through the listed vertices in order, closing back to the first.
    pub fn from_vertices(e: &Embedding, vertices: &[usize]) -> Result<Self, EmbeddingError> {
        let k = vertices.len();
        if k < 3 {
            return Err(EmbeddingError::NotACycle);
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k || sorted[k - 1] >= e.vertex_count() {
            return Err(EmbeddingError::NotACycle);
        }
        let darts = (0..k)
            .map(|i| e.dart(vertices[i], vertices[(i + 1) % k]).ok_or(EmbeddingError::NotACycle))
            .collect::<Result<_, _>>()?;
        Ok(FaceCycle { darts })
    }

    pub fn from_face(e: &Embedding, f: usize) -> Self {
        FaceCycle { darts: e.face_darts(f).to_vec() }
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self, e: &Embedding) -> Vec<usize> {
        self.darts.iter().map(|&d| e.tail(d)).collect()
    }

    pub fn edges(&self) -> Vec<usize> {
        self.darts.iter().map(|&d| d >> 1).collect()
    }

    pub fn reversed(&self) -> Self {
        FaceCycle { darts: self.darts.iter().rev().map(|&d| d ^ 1).collect() }
    }
}
