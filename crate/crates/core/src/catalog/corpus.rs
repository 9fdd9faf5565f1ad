//! Generated test inputs: torus families, small sphere triangulations, and disks with
//! short boundaries.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{altshuler, c11_cubed, c3c5, fill_faces, h7k2, k6, k7, random_refinement, split_vertex, K6Variant};
use crate::embedding::{Dart, Disk, Embedding, FaceCycle, Side};
use crate::graph::Graph;

/// Largest refinement in the torus corpus.
pub const MAX_VERTICES: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Grid,
    RefinedGrid,
    K6(K6Variant),
    H7K2,
    C3C5,
    C11Cubed,
    K7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Grid => f.write_str("grid"),
            Family::RefinedGrid => f.write_str("refined-grid"),
            Family::K6(v) => write!(f, "k6-{}", v.name().to_ascii_lowercase()),
            Family::H7K2 => f.write_str("h7k2"),
            Family::C3C5 => f.write_str("c3c5"),
            Family::C11Cubed => f.write_str("c11cubed"),
            Family::K7 => f.write_str("k7"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub family: Family,
    pub embedding: Embedding,
}

fn steps_for(n: usize, salt: usize) -> usize {
    let want = 2 + (n * 7 + salt * 11) % 17;
    want.min(MAX_VERTICES.saturating_sub(n))
}

/// Torus triangulations from every family, deterministic.
pub fn torus_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for r in 1..=6 {
        for c in 1..=6 {
            for s in 0..c {
                let Ok(g) = altshuler(r, c, s) else { continue };
                let base = format!("grid-{r}-{c}-{s}");
                out.push(Instance { name: base.clone(), family: Family::Grid, embedding: g.embedding.clone() });
                for seed in 0..2u64 {
                    let steps = steps_for(r * c, seed as usize);
                    let e = random_refinement(&g.embedding, steps, seed + (r * 100 + c * 10 + s) as u64);
                    out.push(Instance {
                        name: format!("{base}-r{steps}s{seed}"),
                        family: Family::RefinedGrid,
                        embedding: e,
                    });
                }
            }
        }
    }
    let mut seeded = |name: &str, family: Family, base: Embedding, count: u64| {
        out.push(Instance { name: name.to_string(), family, embedding: base.clone() });
        for seed in 0..count {
            let steps = steps_for(base.vertex_count(), seed as usize + 3);
            out.push(Instance {
                name: format!("{name}-r{steps}s{seed}"),
                family,
                embedding: random_refinement(&base, steps, seed),
            });
        }
    };
    for v in K6Variant::ALL {
        seeded(&format!("{}-filled", v.catalog_id()), Family::K6(v), fill_faces(&k6(v)), 8);
    }
    seeded("h7k2-filled", Family::H7K2, fill_faces(&h7k2()), 8);
    seeded("c3c5-filled", Family::C3C5, fill_faces(&c3c5()), 8);
    seeded("c11cubed", Family::C11Cubed, c11_cubed(), 8);
    seeded("k7", Family::K7, k7(), 8);
    out
}

/// Canonical string of an embedding seen from `root` darts, optionally up to reflection.
fn code_from(e: &Embedding, d0: Dart, reflected: bool) -> Vec<usize> {
    let n = e.vertex_count();
    let mut num = vec![usize::MAX; n];
    let mut entry = vec![0; n];
    let mut queue = VecDeque::new();
    let root = e.tail(d0);
    num[root] = 0;
    entry[root] = d0;
    queue.push_back(root);
    let mut next = 1;
    let mut code = Vec::with_capacity(2 * e.edge_count() + n);
    while let Some(v) = queue.pop_front() {
        let mut d = entry[v];
        for _ in 0..e.degree(v) {
            let w = e.head(d);
            if num[w] == usize::MAX {
                num[w] = next;
                next += 1;
                entry[w] = d ^ 1;
                queue.push_back(w);
            }
            code.push(num[w]);
            d = if reflected { e.pred(d) } else { e.succ(d) };
        }
        code.push(usize::MAX);
    }
    code
}

/// Isomorphism invariant that also separates mirror images when `chiral` is set.
pub fn canonical_code(e: &Embedding, chiral: bool) -> Vec<usize> {
    let mirrors: &[bool] = if chiral { &[false] } else { &[false, true] };
    mirrors
        .iter()
        .flat_map(|&r| (0..e.dart_count()).map(move |d| code_from(e, d, r)))
        .min()
        .unwrap_or_default()
}

/// As [`canonical_code`], with the root vertex fixed.
pub fn rooted_code(e: &Embedding, root: usize) -> Vec<usize> {
    [false, true]
        .iter()
        .flat_map(|&r| e.darts_at(root).iter().map(move |&d| code_from(e, d, r)))
        .min()
        .unwrap_or_default()
}

fn tetrahedron() -> Embedding {
    Embedding::from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).expect("K4")
}

/// Every sphere triangulation on 4 to `max_n` vertices up to isomorphism, grown by
/// vertex splitting from the tetrahedron.
pub fn sphere_triangulations(max_n: usize) -> Vec<Vec<Embedding>> {
    let mut levels = vec![vec![tetrahedron()]];
    for _ in 5..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for e in levels.last().expect("nonempty") {
            for v in 0..e.vertex_count() {
                let d = e.degree(v);
                for i in 0..d {
                    for j in 0..d {
                        let gap = (j + d - i) % d;
                        if gap == 0 {
                            continue;
                        }
                        let s = split_vertex(e, v, i, j);
                        if seen.insert(canonical_code(&s, false)) {
                            next.push(s);
                        }
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// The disk left after deleting vertex `v` of a sphere triangulation.
pub fn link_disk(e: &Embedding, v: usize) -> Option<Disk> {
    let link: Vec<usize> = e.neighbors(v).collect();
    let c = FaceCycle::from_vertices(e, &link).ok()?;
    [Side::Interior, Side::Exterior]
        .into_iter()
        .filter_map(|s| e.extract_disk(&c, s).ok())
        .find(|d| !d.vertex_map.contains(&v))
}

/// Triangulated disks with boundary length `k` and at most `max_interior` interior
/// vertices, up to isomorphism.
pub fn boundary_disks(k: usize, max_interior: usize) -> Vec<Disk> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for level in sphere_triangulations(k + max_interior + 1) {
        for e in level {
            for v in 0..e.vertex_count() {
                if e.degree(v) != k || !seen.insert(rooted_code(&e, v)) {
                    continue;
                }
                if let Some(d) = link_disk(&e, v) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Sphere triangulations with a marked separating `k`-cycle, both sides holding
/// interior vertices: a disk whose outer face is capped and the cap refined.
pub fn double_capped(k: usize, max_interior: usize) -> Vec<(Embedding, Vec<usize>)> {
    let mut out = Vec::new();
    for (i, d) in boundary_disks(k, max_interior).into_iter().enumerate() {
        if d.interior_vertex_count() == 0 {
            continue;
        }
        let capped = d.cap_with_apex();
        let apex = capped.vertex_count() - 1;
        let cap_faces: Vec<usize> = (0..capped.face_count()).filter(|&f| capped.face_vertices(f).contains(&apex)).collect();
        let e = capped.stellate_face(cap_faces[i % cap_faces.len()]).expect("triangle");
        out.push((e, (0..k).collect()));
    }
    out
}

/// Small sphere triangulations: all of them up to `max_n` vertices.
pub fn sphere_corpus(max_n: usize) -> Vec<Embedding> {
    sphere_triangulations(max_n).into_iter().flatten().collect()
}

/// A uniformly shuffled greedy-backtracking proper coloring with at most `k` colors.
pub fn random_proper_coloring<R: Rng>(g: &Graph, k: usize, rng: &mut R) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let palettes: Vec<Vec<u8>> = (0..n)
        .map(|_| {
            let mut p: Vec<u8> = (0..k as u8).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    let mut colors = vec![u8::MAX; n];
    fn go(g: &Graph, order: &[usize], palettes: &[Vec<u8>], colors: &mut Vec<u8>, i: usize, steps: &mut u64) -> bool {
        if i == order.len() {
            return true;
        }
        *steps += 1;
        if *steps > 2_000_000 {
            return false;
        }
        let v = order[i];
        for &c in &palettes[v] {
            if g.neighbors(v).iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                if go(g, order, palettes, colors, i + 1, steps) {
                    return true;
                }
            }
        }
        colors[v] = u8::MAX;
        false
    }
    let mut steps = 0;
    go(g, &order, &palettes, &mut colors, 0, &mut steps).then_some(colors)
}
