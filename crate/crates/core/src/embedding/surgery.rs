use std::collections::VecDeque;

use super::{Dart, Embedding, EmbeddingError, FaceCycle};

/// Which side of an oriented cycle: the faces left of its darts, or right of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Interior,
    Exterior,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub separating: bool,
    /// One side is a single face bounded by the cycle itself.
    pub facial: bool,
    pub interior_faces: Vec<usize>,
    pub exterior_faces: Vec<usize>,
}

/// A triangulated (or at least polygonal) disk cut out of a host embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    pub embedding: Embedding,
    /// `boundary.darts()[i]` is the copy of the source cycle's i-th dart.
    pub boundary: FaceCycle,
    pub outer_face: usize,
    /// Disk vertex to source vertex. Boundary vertices come first, in cycle order.
    pub vertex_map: Vec<usize>,
}

impl Disk {
    pub fn interior_vertex_count(&self) -> usize {
        self.embedding.vertex_count() - self.boundary.len()
    }

    /// Whether every face other than the outer one is a triangle.
    pub fn is_triangulated(&self) -> bool {
        (0..self.embedding.face_count())
            .all(|f| f == self.outer_face || self.embedding.face_darts(f).len() == 3)
    }

    /// Planar triangulation obtained by joining a new vertex to the whole boundary.
    pub fn cap_with_apex(&self) -> Embedding {
        self.embedding.cap_face(self.outer_face).expect("disk boundary is a simple cycle")
    }
}

fn check_cycle(e: &Embedding, c: &FaceCycle) -> Result<(), EmbeddingError> {
    let darts = c.darts();
    let k = darts.len();
    if k < 3 || darts.iter().any(|&d| d >= e.dart_count()) {
        return Err(EmbeddingError::NotACycle);
    }
    let mut verts = Vec::with_capacity(k);
    for i in 0..k {
        if e.head(darts[i]) != e.tail(darts[(i + 1) % k]) {
            return Err(EmbeddingError::NotACycle);
        }
        verts.push(e.tail(darts[i]));
    }
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != k {
        return Err(EmbeddingError::NotACycle);
    }
    Ok(())
}

impl Embedding {
    /// Faces reachable from `start` through the dual without crossing cycle edges.
    fn side_of(&self, c: &FaceCycle, start: usize) -> Vec<bool> {
        let mut blocked = vec![false; self.edge_count()];
        for &d in c.darts() {
            blocked[d >> 1] = true;
        }
        let mut seen = vec![false; self.face_count()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &d in self.face_darts(f) {
                if blocked[d >> 1] {
                    continue;
                }
                let g = self.face_of(d ^ 1);
                if !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        seen
    }

    pub fn is_separating(&self, c: &FaceCycle) -> Result<SeparationReport, EmbeddingError> {
        check_cycle(self, c)?;
        let d0 = c.darts()[0];
        let left = self.side_of(c, self.face_of(d0));
        let collect = |side: &[bool]| -> Vec<usize> {
            side.iter().enumerate().filter(|(_, &s)| s).map(|(f, _)| f).collect()
        };
        if left[self.face_of(d0 ^ 1)] {
            return Ok(SeparationReport {
                separating: false,
                facial: false,
                interior_faces: collect(&left),
                exterior_faces: Vec::new(),
            });
        }
        let right = self.side_of(c, self.face_of(d0 ^ 1));
        let interior_faces = collect(&left);
        let exterior_faces = collect(&right);
        let is_face = |faces: &[usize]| faces.len() == 1 && self.face_darts(faces[0]).len() == c.len();
        let facial = is_face(&interior_faces) || is_face(&exterior_faces);
        Ok(SeparationReport { separating: true, facial, interior_faces, exterior_faces })
    }

    /// Cuts out the faces on one side of `c` as a planar disk whose outer face is `c`.
    pub fn extract_disk(&self, c: &FaceCycle, side: Side) -> Result<Disk, EmbeddingError> {
        check_cycle(self, c)?;
        let d0 = c.darts()[0];
        let (near, far) = match side {
            Side::Interior => (self.face_of(d0), self.face_of(d0 ^ 1)),
            Side::Exterior => (self.face_of(d0 ^ 1), self.face_of(d0)),
        };
        let region = self.side_of(c, near);
        if region[far] {
            return Err(EmbeddingError::SideNotADisk);
        }
        let in_region = |d: Dart| region[self.face_of(d)];
        let boundary_verts = c.vertices(self);
        let mut id = vec![usize::MAX; self.vertex_count()];
        let mut vertex_map = Vec::new();
        for &v in &boundary_verts {
            id[v] = vertex_map.len();
            vertex_map.push(v);
        }
        for (v, slot) in id.iter_mut().enumerate() {
            if *slot == usize::MAX && self.darts_at(v).iter().any(|&d| in_region(d)) {
                *slot = vertex_map.len();
                vertex_map.push(v);
            }
        }
        let rotation: Vec<Vec<usize>> = vertex_map
            .iter()
            .map(|&v| {
                self.darts_at(v)
                    .iter()
                    .filter(|&&d| in_region(d) || in_region(d ^ 1))
                    .map(|&d| id[self.head(d)])
                    .collect()
            })
            .collect();
        let embedding = Embedding::from_rotation(&rotation).map_err(|_| EmbeddingError::SideNotADisk)?;
        let region_faces = region.iter().filter(|&&r| r).count();
        if embedding.genus() != 0 || embedding.face_count() != region_faces + 1 {
            return Err(EmbeddingError::SideNotADisk);
        }
        let k = boundary_verts.len();
        let boundary = FaceCycle::from_vertices(&embedding, &(0..k).collect::<Vec<_>>())
            .map_err(|_| EmbeddingError::SideNotADisk)?;
        let bd = boundary.darts()[0];
        let outer_face = match side {
            Side::Interior => embedding.face_of(bd ^ 1),
            Side::Exterior => embedding.face_of(bd),
        };
        if embedding.face_darts(outer_face).len() != k {
            return Err(EmbeddingError::SideNotADisk);
        }
        Ok(Disk { embedding, boundary, outer_face, vertex_map })
    }

    /// Adds a new vertex inside face `f` joined to each of its corners.
    pub fn cap_face(&self, f: usize) -> Result<Embedding, EmbeddingError> {
        let darts = self.face_darts(f);
        let tails: Vec<usize> = darts.iter().map(|&d| self.tail(d)).collect();
        let mut distinct = tails.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != tails.len() {
            return Err(EmbeddingError::NotACycle);
        }
        let apex = self.vertex_count();
        let mut rotation = self.rotation();
        let k = tails.len();
        for i in 0..k {
            let (prev, v) = (tails[i], tails[(i + 1) % k]);
            let at = rotation[v].iter().position(|&x| x == prev).expect("face edge");
            rotation[v].insert(at + 1, apex);
        }
        rotation.push(tails.iter().rev().copied().collect());
        Embedding::from_rotation(&rotation)
    }

    /// Adds a chord inside face `f` between its `i`-th and `j`-th corners.
    pub fn split_face(&self, f: usize, i: usize, j: usize) -> Result<Embedding, EmbeddingError> {
        let tails: Vec<usize> = self.face_darts(f).iter().map(|&d| self.tail(d)).collect();
        let k = tails.len();
        if i >= k || j >= k || (i + 1) % k == j || (j + 1) % k == i || i == j {
            return Err(EmbeddingError::NotACycle);
        }
        let (u, v) = (tails[i], tails[j]);
        if self.dart(u, v).is_some() {
            return Err(EmbeddingError::ParallelEdge(u.min(v), u.max(v)));
        }
        let mut rotation = self.rotation();
        for (at, other, prev) in [(u, v, tails[(i + k - 1) % k]), (v, u, tails[(j + k - 1) % k])] {
            let p = rotation[at].iter().position(|&x| x == prev).expect("face edge");
            rotation[at].insert(p + 1, other);
        }
        Embedding::from_rotation(&rotation)
    }

    /// Subdivides triangular face `f` with a new degree-3 vertex.
    pub fn stellate_face(&self, f: usize) -> Result<Embedding, EmbeddingError> {
        if self.face_darts(f).len() != 3 {
            return Err(EmbeddingError::FaceNotTriangle(f));
        }
        self.cap_face(f)
    }
}
