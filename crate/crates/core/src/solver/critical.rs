//! Torus triangulations with chromatic number 6, by their 6-critical subgraph.
//!
//! The subgraph is located, its induced sub-embedding identified with a catalog
//! embedding, and the disks inside its special faces are colored so that their boundary
//! patterns agree with one of the catalog figures. The case tables say which figure to
//! try first; any figure and any symmetry of the catalog embedding is accepted as long as
//! every boundary pattern is realized.

use std::collections::HashMap;

use super::altshuler::recognize_grid;
use super::disk::{boundary_colors, canonical, cap_witnesses, extend_boundary, kempe_closure};
use super::extend::{extend_into_faces, transplant, SubEmbedding};
use super::tables::{tables, SquareDiskType, Step54, Step6, Tables};
use super::{Critical, SolveError};
use crate::budget::Budget;
use crate::catalog::{catalog_embedding, figure, figures, CatalogEmbedding, K6Variant};
use crate::chroma::{Pattern, SubgraphMatch};
use crate::coloring::{
    classify_hexagon, classify_pentagon, kempe_change_in, letters, Color, EdgeColoring, PartialColoring, SquareType,
};
use crate::embedding::iso::{automorphisms, find_isomorphism, EmbeddingMap};
use crate::embedding::{Disk, Embedding, FaceCycle, Side};

/// A special face of the catalog embedding and the host disk behind it.
struct FaceState {
    name: String,
    cycle: FaceCycle,
    disk: Disk,
    /// Canonical boundary pattern to a disk coloring realizing it, or `None` if none does.
    known: HashMap<Vec<Color>, Option<EdgeColoring>>,
}

impl FaceState {
    fn new(name: &str, cycle: FaceCycle, disk: Disk, budget: &Budget) -> Result<Self, SolveError> {
        let mut known = HashMap::new();
        for w in kempe_closure(&disk, cap_witnesses(&disk, budget)?) {
            known.entry(canonical(&boundary_colors(&disk, &w))).or_insert(Some(w));
        }
        Ok(FaceState { name: name.to_string(), cycle, disk, known })
    }

    fn learn(&mut self, c: &EdgeColoring) {
        self.known.insert(canonical(&boundary_colors(&self.disk, c)), Some(c.clone()));
    }

    fn realize(&mut self, pattern: &[Color], budget: &Budget) -> Result<Option<EdgeColoring>, SolveError> {
        let key = canonical(pattern);
        if let Some(hit) = self.known.get(&key) {
            return Ok(hit.clone());
        }
        let found = extend_boundary(&self.disk, &key, budget)?;
        self.known.insert(key, found.clone());
        Ok(found)
    }

    fn admits(&mut self, t: SquareType, budget: &Budget) -> Result<bool, SolveError> {
        let pattern: Vec<Color> = t.pattern().chars().map(|ch| if ch == 't' { 0 } else { 1 }).collect();
        Ok(self.realize(&pattern, budget)?.is_some())
    }

    fn square_type(&mut self, budget: &Budget) -> Result<SquareDiskType, SolveError> {
        let mut ok = Vec::new();
        for t in SquareType::ALL {
            if self.admits(t, budget)? {
                ok.push(t);
            }
        }
        SquareDiskType::of(|t| ok.contains(&t)).ok_or_else(|| {
            SolveError::CheckFailed(format!("square disk {} admits only {ok:?}", self.name))
        })
    }

    /// A coloring straight from the apex cap.
    fn apex_coloring(&self, budget: &Budget) -> Result<EdgeColoring, SolveError> {
        Ok(cap_witnesses(&self.disk, budget)?.swap_remove(0))
    }
}

struct Identified {
    host: Embedding,
    sub: SubEmbedding,
    catalog: &'static CatalogEmbedding,
    phi: EmbeddingMap,
    kind: Critical,
    mirrored: bool,
}

fn identify(g: &Embedding, m: &SubgraphMatch) -> Result<Identified, SolveError> {
    let candidates: Vec<(&str, Critical)> = match m.pattern {
        Pattern::K6 => K6Variant::ALL.iter().map(|&v| (v.catalog_id(), Critical::K6(v))).collect(),
        Pattern::H7K2 => vec![("h7k2", Critical::H7K2)],
        Pattern::C3C5 => vec![("c3c5", Critical::C3C5)],
        p => return Err(SolveError::NotApplicable(format!("{p} has no catalog figures"))),
    };
    let edges = m.pattern.graph().edges().to_vec();
    let sub = SubEmbedding::from_pattern(g, &m.map, &edges)?;
    for (id, kind) in candidates {
        let cat = catalog_embedding(id);
        let Some(phi) = find_isomorphism(&sub.embedding, &cat.embedding, true) else { continue };
        if !phi.reflected {
            return Ok(Identified { host: g.clone(), sub, catalog: cat, phi, kind, mirrored: false });
        }
        let host = g.mirrored();
        let sub = SubEmbedding::from_pattern(&host, &m.map, &edges)?;
        let phi = find_isomorphism(&sub.embedding, &cat.embedding, false)
            .ok_or_else(|| SolveError::CheckFailed("mirror image lost its isomorphism".into()))?;
        return Ok(Identified { host, sub, catalog: cat, phi, kind, mirrored: true });
    }
    Err(SolveError::NotApplicable(format!("{} sub-embedding matches no catalog embedding", m.pattern)))
}

/// Boundary colors of `c` around a catalog cycle.
fn colors_on(cycle: &FaceCycle, c: impl Fn(usize) -> Color) -> Vec<Color> {
    cycle.edges().into_iter().map(c).collect()
}

fn pentagon_entry(
    t: &Tables,
    square: SquareDiskType,
    face: &mut FaceState,
    budget: &Budget,
    trace: &mut Vec<String>,
) -> Result<Option<String>, SolveError> {
    let half = t.pentagon_half(square);
    let mut c = face.apex_coloring(budget)?;
    for _ in 0..10 {
        let b = boundary_colors(&face.disk, &c);
        let sig = classify_pentagon(b.clone().try_into().expect("pentagon"))
            .map_err(|e| SolveError::CheckFailed(e.to_string()))?;
        match t.step_54(half, sig) {
            Some(Step54::Base(entry)) => {
                trace.push(format!("pentagon {sig} with square {}: {entry}", half.square));
                face.learn(&c);
                return Ok(Some(entry.to_string()));
            }
            Some(Step54::Reduce { fixed, moving, targets }) => {
                let moving_color = b[moving as usize - 1];
                let major = (0..3).find(|&x| b.iter().filter(|&&y| y == x).count() == 3).expect("pentagon majority");
                let seed = face.disk.boundary.edges()[moving as usize - 1];
                c = kempe_change_in(&face.disk.embedding, &c, seed, (moving_color, major), Some(face.disk.outer_face))
                    .map_err(|e| SolveError::CheckFailed(e.to_string()))?;
                let next = classify_pentagon(boundary_colors(&face.disk, &c).try_into().expect("pentagon"))
                    .map_err(|e| SolveError::CheckFailed(e.to_string()))?;
                trace.push(format!("pentagon {sig}: keep {fixed}, move {moving} -> {next}"));
                if !targets.contains(&next) {
                    trace.push(format!("pentagon reduction left the listed targets at {next}"));
                    return Ok(None);
                }
            }
            None => return Ok(None),
        }
    }
    Ok(None)
}

fn hexagon_entry(
    t: &Tables,
    face: &mut FaceState,
    budget: &Budget,
    trace: &mut Vec<String>,
) -> Result<Option<String>, SolveError> {
    let mut c = face.apex_coloring(budget)?;
    for _ in 0..10 {
        let b: [Color; 6] = boundary_colors(&face.disk, &c).try_into().expect("hexagon");
        let w = classify_hexagon(b).map_err(|e| SolveError::CheckFailed(e.to_string()))?;
        match t.step_6(w.class) {
            Some(Step6::Base(entry)) => {
                trace.push(format!("hexagon {}: {entry}", w.class));
                face.learn(&c);
                return Ok(Some(entry.to_string()));
            }
            Some(Step6::Reduce { letters: ls, targets }) => {
                let color_of = |l: u8| (0..3).find(|&x| w.permutation[x as usize] == l).expect("permutation");
                let at = w.class.pattern().iter().position(|&x| x == 1).expect("class has a p");
                let seed = face.disk.boundary.edges()[w.edge_at(at)];
                c = kempe_change_in(
                    &face.disk.embedding,
                    &c,
                    seed,
                    (color_of(ls[0]), color_of(ls[1])),
                    Some(face.disk.outer_face),
                )
                .map_err(|e| SolveError::CheckFailed(e.to_string()))?;
                let next = classify_hexagon(boundary_colors(&face.disk, &c).try_into().expect("hexagon"))
                    .map_err(|e| SolveError::CheckFailed(e.to_string()))?;
                trace.push(format!("hexagon {}: swap {} -> {}", w.class, letters(&ls), next.class));
                if !targets.contains(&next.class) {
                    trace.push(format!("hexagon reduction left the listed targets at {}", next.class));
                    return Ok(None);
                }
            }
            None => return Ok(None),
        }
    }
    Ok(None)
}

/// The figure the case tables point to.
fn table_entry(
    kind: Critical,
    faces: &mut [FaceState],
    budget: &Budget,
    trace: &mut Vec<String>,
) -> Result<Option<String>, SolveError> {
    let t = tables();
    let by_name = |faces: &[FaceState], n: &str| faces.iter().position(|f| f.name == n).expect("special face");
    Ok(match kind {
        Critical::K6(K6Variant::V444A) | Critical::K6(K6Variant::V444B) => {
            let mut triple = [SquareDiskType::One; 3];
            for (i, name) in ["S1", "S2", "S3"].iter().enumerate() {
                let idx = by_name(faces, name);
                triple[i] = faces[idx].square_type(budget)?;
            }
            let key: String = triple.iter().map(|t| t.digit()).collect();
            let entry = if kind == Critical::K6(K6Variant::V444B) {
                t.lookup_444b(triple).map(str::to_string)
            } else {
                t.lookup_444a(triple).map(|(e, k)| {
                    trace.push(format!("type triple {key} read with shift {k}"));
                    e.to_string()
                })
            };
            trace.push(format!("square disk types {key}: {}", entry.as_deref().unwrap_or("no entry")));
            entry
        }
        Critical::K6(K6Variant::V54) => {
            let sq = by_name(faces, "square");
            let square = faces[sq].square_type(budget)?;
            trace.push(format!("square disk type {}", square.digit()));
            let p = by_name(faces, "pentagon");
            pentagon_entry(t, square, &mut faces[p], budget, trace)?
        }
        Critical::K6(K6Variant::V6) => {
            let h = by_name(faces, "hexagon");
            hexagon_entry(t, &mut faces[h], budget, trace)?
        }
        Critical::H7K2 | Critical::C3C5 => {
            let table = if kind == Critical::H7K2 { &t.h7k2 } else { &t.c3c5 };
            let q = by_name(faces, "quad");
            let mut entry = None;
            for kind in [SquareType::C, SquareType::B1, SquareType::B2] {
                if faces[q].admits(kind, budget)? {
                    entry = Tables::quad_entry(table, kind).map(str::to_string);
                    trace.push(format!("quad admits {kind}: {}", entry.as_deref().unwrap_or("no entry")));
                    break;
                }
            }
            entry
        }
        Critical::C11Cubed => None,
    })
}

/// Colors a host whose 6-critical subgraph is `m`. Returns the case and a certified coloring.
pub fn solve_critical(
    g: &Embedding,
    m: &SubgraphMatch,
    budget: &Budget,
    trace: &mut Vec<String>,
) -> Result<(Critical, EdgeColoring), SolveError> {
    trace.push(format!("{} at {:?}", m.pattern, m.map));
    if m.pattern == Pattern::C11Cubed {
        let edges = m.pattern.graph().edges().to_vec();
        let sub = SubEmbedding::from_pattern(g, &m.map, &edges)?;
        let c = recognize_grid(&sub.embedding)?;
        trace.push("grid coloring of the C11^3 triangulation".into());
        let full = extend_into_faces(g, &sub, &c, &PartialColoring::empty(g.edge_count()), budget)?;
        return Ok((Critical::C11Cubed, full));
    }
    let id = identify(g, m)?;
    trace.push(format!("identified as {}{}", id.catalog.id, if id.mirrored { " (mirrored)" } else { "" }));
    let mut inverse = vec![usize::MAX; id.catalog.embedding.vertex_count()];
    for (s, &c) in id.phi.vertices.iter().enumerate() {
        inverse[c] = id.sub.vertices[s];
    }
    let mut faces = Vec::new();
    for (name, cycle) in &id.catalog.special {
        let vs: Vec<usize> = cycle.vertices(&id.catalog.embedding).iter().map(|&v| inverse[v]).collect();
        let hc = FaceCycle::from_vertices(&id.host, &vs).map_err(|e| SolveError::NotARefinement(e.to_string()))?;
        let disk =
            id.host.extract_disk(&hc, Side::Interior).map_err(|e| SolveError::NotARefinement(format!("{name}: {e}")))?;
        faces.push(FaceState::new(name, cycle.clone(), disk, budget)?);
    }
    let suggested = table_entry(id.kind, &mut faces, budget, trace)?;
    let mut order: Vec<&str> = suggested.iter().map(String::as_str).collect();
    for f in figures() {
        if f.embedding == id.catalog.id && Some(f.id.as_str()) != suggested.as_deref() {
            order.push(&f.id);
        }
    }
    let autos = automorphisms(&id.catalog.embedding, false);
    let cat_edges = id.catalog.embedding.edge_count();
    for fid in order {
        let fig = figure(fid).map_err(|e| SolveError::CheckFailed(e.to_string()))?;
        let base = fig.coloring.to_full().map_err(|e| SolveError::CheckFailed(format!("{fid}: {e}")))?;
        'tau: for (k, tau) in autos.iter().enumerate() {
            let mut moved = vec![0; cat_edges];
            for x in 0..cat_edges {
                moved[tau.edge(x)] = base.get(x);
            }
            let mut pieces = Vec::new();
            for face in faces.iter_mut() {
                let want = colors_on(&face.cycle, |x| moved[x]);
                match face.realize(&want, budget)? {
                    Some(c) => pieces.push(c),
                    None => continue 'tau,
                }
            }
            if Some(fid) != suggested.as_deref() {
                trace.push(format!("table entry {} not realized; using {fid}", suggested.as_deref().unwrap_or("none")));
            }
            trace.push(format!("figure {fid} under symmetry {k}"));
            let sub_colors: Vec<Color> = (0..id.sub.embedding.edge_count()).map(|e| moved[id.phi.edge(e)]).collect();
            let sub_coloring = EdgeColoring::new(sub_colors).expect("colors in range");
            let mut out = PartialColoring::empty(id.host.edge_count());
            for e in 0..id.sub.embedding.edge_count() {
                out.set(id.sub.host_edge(&id.host, e), Some(sub_coloring.get(e)));
            }
            for (face, c) in faces.iter().zip(&pieces) {
                transplant(&id.host, &face.disk, c, &mut out)?;
            }
            let full = extend_into_faces(&id.host, &id.sub, &sub_coloring, &out, budget)?;
            return Ok((id.kind, full));
        }
    }
    Err(SolveError::NoTableEntry(format!("{}: no figure matches the disk boundaries", id.catalog.id)))
}
