//! Isomorphisms between embeddings (rotation-preserving, optionally reversing).

use super::{Dart, Embedding};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingMap {
    pub vertices: Vec<usize>,
    pub darts: Vec<Dart>,
    /// Orientation reversing: rotations are mapped to their mirror images.
    pub reflected: bool,
}

impl EmbeddingMap {
    pub fn edge(&self, e: usize) -> usize {
        self.darts[2 * e] >> 1
    }
}

fn extend(a: &Embedding, b: &Embedding, target: Dart, reflected: bool) -> Option<EmbeddingMap> {
    let darts = a.dart_count();
    let mut map = vec![usize::MAX; darts];
    let mut used = vec![false; darts];
    let mut stack = vec![(0, target)];
    while let Some((d, t)) = stack.pop() {
        if map[d] != usize::MAX {
            if map[d] != t {
                return None;
            }
            continue;
        }
        if used[t] || a.degree(a.tail(d)) != b.degree(b.tail(t)) {
            return None;
        }
        map[d] = t;
        used[t] = true;
        let step = if reflected { b.pred(t) } else { b.succ(t) };
        stack.push((a.succ(d), step));
        stack.push((d ^ 1, t ^ 1));
    }
    let mut vertices = vec![usize::MAX; a.vertex_count()];
    for (d, &m) in map.iter().enumerate().take(darts) {
        let (u, w) = (a.tail(d), b.tail(m));
        if vertices[u] == usize::MAX {
            vertices[u] = w;
        } else if vertices[u] != w {
            return None;
        }
    }
    let mut hit = vec![false; b.vertex_count()];
    for &w in &vertices {
        if std::mem::replace(&mut hit[w], true) {
            return None;
        }
    }
    Some(EmbeddingMap { vertices, darts: map, reflected })
}

/// All isomorphisms from `a` onto `b`.
pub fn isomorphisms(a: &Embedding, b: &Embedding, allow_reflection: bool) -> Vec<EmbeddingMap> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || a.face_count() != b.face_count() {
        return Vec::new();
    }
    if a.dart_count() == 0 {
        return vec![EmbeddingMap { vertices: vec![0], darts: Vec::new(), reflected: false }];
    }
    let mirrors: &[bool] = if allow_reflection { &[false, true] } else { &[false] };
    let mut out = Vec::new();
    for &reflected in mirrors {
        for t in 0..b.dart_count() {
            if let Some(m) = extend(a, b, t, reflected) {
                out.push(m);
            }
        }
    }
    out
}

pub fn find_isomorphism(a: &Embedding, b: &Embedding, allow_reflection: bool) -> Option<EmbeddingMap> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || a.face_count() != b.face_count() {
        return None;
    }
    let mirrors: &[bool] = if allow_reflection { &[false, true] } else { &[false] };
    mirrors
        .iter()
        .find_map(|&r| (0..b.dart_count()).find_map(|t| extend(a, b, t, r)))
}

pub fn automorphisms(a: &Embedding, allow_reflection: bool) -> Vec<EmbeddingMap> {
    isomorphisms(a, a, allow_reflection)
}
