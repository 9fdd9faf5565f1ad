//! Colorings of triangulated disks with constraints on the boundary.
//!
//! The outer face of a disk is never constrained. Boundary colors are read along
//! `disk.boundary`, position 0 first.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::planar::solve_planar;
use super::{ExactSolver, SolveError};
use crate::budget::{Budget, BudgetExceeded};
use crate::coloring::{
    classify_hexagon, classify_pentagon, classify_square, first_seen_permutation, kempe_change_in, Color,
    EdgeColoring, EdgeColors, HexagonClass, PartialColoring, PentagonSignature, SquareType,
};
use crate::embedding::{Disk, Embedding};

/// Upper bound on colorings visited by the Kempe closure before giving up on it.
const CLOSURE_LIMIT: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundarySignature {
    Triangle,
    Square(SquareType),
    Pentagon(PentagonSignature),
    Hexagon(HexagonClass),
    /// Anything else, as first-seen letters.
    Other(String),
}

impl fmt::Display for BoundarySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundarySignature::Triangle => f.write_str("tpg"),
            BoundarySignature::Square(t) => write!(f, "{t}"),
            BoundarySignature::Pentagon(p) => write!(f, "{p}"),
            BoundarySignature::Hexagon(h) => write!(f, "{h}"),
            BoundarySignature::Other(s) => f.write_str(s),
        }
    }
}

/// First-seen normal form of a color sequence.
pub fn canonical(colors: &[Color]) -> Vec<Color> {
    let perm = first_seen_permutation(colors);
    colors.iter().map(|&c| perm[c as usize]).collect()
}

pub fn boundary_signature(colors: &[Color]) -> BoundarySignature {
    let other = || BoundarySignature::Other(crate::coloring::letters(&canonical(colors)));
    match colors.len() {
        3 if colors[0] != colors[1] && colors[1] != colors[2] && colors[0] != colors[2] => BoundarySignature::Triangle,
        4 => classify_square(colors.try_into().unwrap()).map_or_else(|_| other(), |s| BoundarySignature::Square(s.kind)),
        5 => classify_pentagon(colors.try_into().unwrap()).map_or_else(|_| other(), BoundarySignature::Pentagon),
        6 => classify_hexagon(colors.try_into().unwrap()).map_or_else(|_| other(), |w| BoundarySignature::Hexagon(w.class)),
        _ => other(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryConstraint {
    /// Exactly these colors.
    Fixed(Vec<Color>),
    Squares(Vec<SquareType>),
    Pentagons(Vec<PentagonSignature>),
    Hexagons(Vec<HexagonClass>),
}

impl BoundaryConstraint {
    pub fn accepts(&self, colors: &[Color]) -> bool {
        match (self, boundary_signature(colors)) {
            (BoundaryConstraint::Fixed(want), _) => want == colors,
            (BoundaryConstraint::Squares(ts), BoundarySignature::Square(t)) => ts.contains(&t),
            (BoundaryConstraint::Pentagons(ps), BoundarySignature::Pentagon(p)) => ps.contains(&p),
            (BoundaryConstraint::Hexagons(hs), BoundarySignature::Hexagon(h)) => hs.contains(&h),
            _ => false,
        }
    }

    /// Whether colorings may be freely permuted to meet the constraint.
    fn up_to_permutation(&self) -> bool {
        !matches!(self, BoundaryConstraint::Fixed(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSolution {
    /// Coloring of the disk's own edges.
    pub coloring: EdgeColoring,
    pub boundary: Vec<Color>,
    pub signature: BoundarySignature,
    /// Found by exhaustive search rather than by a cap or Kempe witness.
    pub exhaustive: bool,
}

pub fn boundary_colors<C: EdgeColors + ?Sized>(disk: &Disk, c: &C) -> Vec<Color> {
    disk.boundary.edges().iter().map(|&x| c.color(x).expect("boundary edge colored")).collect()
}

/// Pulls a coloring of `host` back onto the disk, matching edges by their ends.
fn restrict(disk: &Disk, host: &Embedding, c: &EdgeColoring) -> EdgeColoring {
    let colors = disk
        .embedding
        .edges()
        .iter()
        .map(|&[u, v]| c.get(host.edge_index(u, v).expect("disk edge survives in the cap")))
        .collect();
    EdgeColoring::new(colors).expect("colors in range")
}

/// Fills the outer face with a fan of chords from corner `i`.
fn fan(disk: &Disk, i: usize) -> Option<Embedding> {
    let corners: Vec<usize> = disk.embedding.face_darts(disk.outer_face).iter().map(|&d| disk.embedding.tail(d)).collect();
    let k = corners.len();
    let hub = corners[i];
    let mut e = disk.embedding.clone();
    for step in 2..k - 1 {
        let target = corners[(i + step) % k];
        let f = (0..e.face_count()).find(|&f| {
            let vs = e.face_vertices(f);
            vs.len() > 3 && vs.contains(&hub) && vs.contains(&target)
        })?;
        let vs = e.face_vertices(f);
        let a = vs.iter().position(|&v| v == hub)?;
        let b = vs.iter().position(|&v| v == target)?;
        e = e.split_face(f, a, b).ok()?;
    }
    Some(e)
}

/// Colorings read off the four-colorable planar triangulations obtained by filling the
/// outer face: one with an apex, and a fan from each corner.
pub fn cap_witnesses(disk: &Disk, budget: &Budget) -> Result<Vec<EdgeColoring>, SolveError> {
    let mut out = Vec::new();
    let apex = disk.cap_with_apex();
    let r = solve_planar(&apex, budget)?;
    out.push(restrict(disk, &apex, r.coloring.as_ref().expect("planar triangulations are colorable")));
    let k = disk.boundary.len();
    if k >= 4 {
        for i in 0..k {
            if let Some(filled) = fan(disk, i) {
                let r = solve_planar(&filled, budget)?;
                out.push(restrict(disk, &filled, r.coloring.as_ref().expect("colorable")));
            }
        }
    }
    Ok(out)
}

/// Kempe changes seeded on a boundary edge, with the outer face not linking.
pub fn boundary_kempe_moves(disk: &Disk, c: &EdgeColoring) -> Vec<EdgeColoring> {
    let mut out = Vec::new();
    for x in disk.boundary.edges() {
        let a = c.get(x);
        for b in 0..3 {
            if b != a {
                if let Ok(next) = kempe_change_in(&disk.embedding, c, x, (a, b), Some(disk.outer_face)) {
                    out.push(next);
                }
            }
        }
    }
    out
}

/// Breadth-first closure of `seeds` under boundary Kempe moves, one coloring kept per
/// boundary pattern up to permutation.
pub fn kempe_closure(disk: &Disk, seeds: Vec<EdgeColoring>) -> Vec<EdgeColoring> {
    let mut seen: HashSet<Vec<Color>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if seen.insert(canonical(&boundary_colors(disk, &s))) {
            queue.push_back(s);
        }
    }
    while let Some(c) = queue.pop_front() {
        if out.len() >= CLOSURE_LIMIT {
            break;
        }
        for next in boundary_kempe_moves(disk, &c) {
            if seen.insert(canonical(&boundary_colors(disk, &next))) {
                queue.push_back(next);
            }
        }
        out.push(c);
    }
    out
}

/// Sequences of length `k` over three letters in first-seen normal form.
pub fn canonical_sequences(k: usize) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in out {
            let top = s.iter().copied().max().map_or(0, |m| m + 1).min(2);
            for c in 0..=top {
                let mut t = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn fixed_boundary(disk: &Disk, colors: &[Color]) -> PartialColoring {
    let mut fixed = PartialColoring::empty(disk.embedding.edge_count());
    for (x, &c) in disk.boundary.edges().into_iter().zip(colors) {
        fixed.set(x, Some(c));
    }
    fixed
}

/// Exhaustive search for a disk coloring with exactly these boundary colors.
pub fn extend_boundary(disk: &Disk, colors: &[Color], budget: &Budget) -> Result<Option<EdgeColoring>, BudgetExceeded> {
    let solver = ExactSolver::new(&disk.embedding, Some(disk.outer_face));
    Ok(solver.find(&fixed_boundary(disk, colors), budget)?.map(|c| c.to_full().expect("complete")))
}

/// Every boundary pattern, up to permutation, that extends over the disk.
pub fn achievable_boundaries(disk: &Disk, budget: &Budget) -> Result<Vec<Vec<Color>>, BudgetExceeded> {
    let mut out = Vec::new();
    for s in canonical_sequences(disk.boundary.len()) {
        if extend_boundary(disk, &s, budget)?.is_some() {
            out.push(s);
        }
    }
    Ok(out)
}

fn solution(disk: &Disk, coloring: EdgeColoring, exhaustive: bool) -> DiskSolution {
    let boundary = boundary_colors(disk, &coloring);
    let signature = boundary_signature(&boundary);
    DiskSolution { coloring, boundary, signature, exhaustive }
}

/// A disk coloring meeting `bc`: cap and Kempe witnesses first, exhaustive search last.
pub fn solve_disk(disk: &Disk, bc: &BoundaryConstraint, budget: &Budget) -> Result<Option<DiskSolution>, SolveError> {
    if disk.is_triangulated() && bc.up_to_permutation() {
        let witnesses = kempe_closure(disk, cap_witnesses(disk, budget)?);
        if let Some(c) = witnesses.into_iter().find(|c| bc.accepts(&boundary_colors(disk, c))) {
            return Ok(Some(solution(disk, c, false)));
        }
    }
    let candidates = match bc {
        BoundaryConstraint::Fixed(colors) => vec![colors.clone()],
        _ => canonical_sequences(disk.boundary.len()).into_iter().filter(|s| bc.accepts(s)).collect(),
    };
    for s in candidates {
        if let Some(c) = extend_boundary(disk, &s, budget)? {
            return Ok(Some(solution(disk, c, true)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::coloring::{parity_check, verify_partial};
    use crate::embedding::{FaceCycle, Side};

    fn double_capped_square() -> Disk {
        // square 0-1-2-3 with two interior vertices 4 (joined to 0,1,2,3) then stellated
        let sq = Embedding::from_rotation(&[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        let c = FaceCycle::from_vertices(&sq, &[0, 1, 2, 3]).unwrap();
        let f = sq.face_of(c.darts()[0]);
        let capped = sq.cap_face(f).unwrap();
        let e = capped.stellate_face(0).unwrap();
        let c = FaceCycle::from_vertices(&e, &[0, 1, 2, 3]).unwrap();
        let side = if e.is_separating(&c).unwrap().interior_faces.len() > 1 { Side::Interior } else { Side::Exterior };
        e.extract_disk(&c, side).unwrap()
    }

    #[test]
    fn canonical_sequence_counts() {
        assert_eq!(canonical_sequences(4).len(), 14);
        assert_eq!(canonical_sequences(6).len(), 122);
    }

    #[test]
    fn witnesses_are_proper_and_even() {
        let disk = double_capped_square();
        let b = Budget::unlimited();
        let ws = cap_witnesses(&disk, &b).unwrap();
        assert!(ws.len() >= 3);
        for w in kempe_closure(&disk, ws) {
            let r = verify_partial(&disk.embedding, &w);
            assert!(r.violations.iter().all(|v| v.face == disk.outer_face));
            assert!(parity_check(&boundary_colors(&disk, &w)));
        }
    }

    #[test]
    fn solve_disk_agrees_with_exhaustive_search() {
        let disk = double_capped_square();
        let b = Budget::unlimited();
        let reachable: Vec<SquareType> = achievable_boundaries(&disk, &b)
            .unwrap()
            .iter()
            .filter_map(|s| match boundary_signature(s) {
                BoundarySignature::Square(t) => Some(t),
                _ => None,
            })
            .collect();
        for t in SquareType::ALL {
            let got = solve_disk(&disk, &BoundaryConstraint::Squares(vec![t]), &b).unwrap();
            assert_eq!(got.is_some(), reachable.contains(&t), "{t}");
            if let Some(s) = got {
                assert_eq!(s.signature, BoundarySignature::Square(t));
            }
        }
    }

    #[test]
    fn fixed_boundary_respected() {
        let e = catalog::icosahedron();
        let c = FaceCycle::from_face(&e, 0);
        let disk = e.extract_disk(&c.reversed(), Side::Interior).unwrap();
        let b = Budget::unlimited();
        let s = solve_disk(&disk, &BoundaryConstraint::Fixed(vec![2, 0, 1]), &b).unwrap().unwrap();
        assert_eq!(s.boundary, vec![2, 0, 1]);
        assert!(solve_disk(&disk, &BoundaryConstraint::Fixed(vec![0, 0, 1]), &b).unwrap().is_none());
    }
}
