//! Edge 3-colorings of embedded graphs and their verification.
//!
//! Colors are `0, 1, 2`; the letters `t, p, g` are only used for display.

pub mod format;
pub mod kempe;
pub mod signature;
mod tait;

pub use kempe::{kempe_chain, kempe_chain_in, kempe_change, kempe_change_in, KempeChain};
pub use signature::{
    classify_hexagon, classify_pentagon, classify_square, first_seen_permutation, parity_check, HexagonClass, HexagonWitness,
    PentagonSignature, SquareSignature, SquareType,
};
pub use tait::tait_lift;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::Embedding;

pub type Color = u8;

pub const LETTERS: [char; 3] = ['t', 'p', 'g'];

pub fn letters(colors: &[Color]) -> String {
    colors.iter().map(|&c| LETTERS[c as usize]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("embedding is not a triangulation")]
    NotTriangulation,
    #[error("coloring does not cover every edge")]
    ColoringIncomplete,
    #[error("coloring has {got} entries but the embedding has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex coloring is improper on edge {0}-{1}")]
    ImproperVertexColoring(usize, usize),
    #[error("seed edge {0} is not colored with one of the chain colors")]
    SeedNotInColors(usize),
    #[error("square carries three distinct colors")]
    MixedTriple,
    #[error("color multiplicities violate parity")]
    BadParity,
    #[error("color {0} is out of range")]
    BadColor(Color),
}

/// Read and write access to edge colors, shared by full and partial colorings.
pub trait EdgeColors {
    fn edge_len(&self) -> usize;
    fn color(&self, e: usize) -> Option<Color>;
    fn set_color(&mut self, e: usize, c: Color);
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self, ColoringError> {
        if let Some(&c) = colors.iter().find(|&&c| c > 2) {
            return Err(ColoringError::BadColor(c));
        }
        Ok(EdgeColoring { colors })
    }

    pub fn get(&self, e: usize) -> Color {
        self.colors[e]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn to_partial(&self) -> PartialColoring {
        PartialColoring { colors: self.colors.iter().map(|&c| Some(c)).collect() }
    }

    /// Applies `perm[c]` to every color.
    pub fn permuted(&self, perm: [Color; 3]) -> Self {
        EdgeColoring { colors: self.colors.iter().map(|&c| perm[c as usize]).collect() }
    }
}

impl EdgeColors for EdgeColoring {
    fn edge_len(&self) -> usize {
        self.colors.len()
    }
    fn color(&self, e: usize) -> Option<Color> {
        Some(self.colors[e])
    }
    fn set_color(&mut self, e: usize, c: Color) {
        self.colors[e] = c;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn empty(edges: usize) -> Self {
        PartialColoring { colors: vec![None; edges] }
    }

    pub fn from_options(colors: Vec<Option<Color>>) -> Result<Self, ColoringError> {
        if let Some(c) = colors.iter().flatten().find(|&&c| c > 2) {
            return Err(ColoringError::BadColor(*c));
        }
        Ok(PartialColoring { colors })
    }

    pub fn get(&self, e: usize) -> Option<Color> {
        self.colors[e]
    }

    pub fn set(&mut self, e: usize, c: Option<Color>) {
        assert!(c.is_none_or(|c| c < 3), "color out of range");
        self.colors[e] = c;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn uncolored(&self) -> impl Iterator<Item = usize> + '_ {
        self.colors.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(e, _)| e)
    }

    pub fn to_full(&self) -> Result<EdgeColoring, ColoringError> {
        self.colors
            .iter()
            .map(|c| c.ok_or(ColoringError::ColoringIncomplete))
            .collect::<Result<Vec<_>, _>>()
            .map(|colors| EdgeColoring { colors })
    }

    pub fn permuted(&self, perm: [Color; 3]) -> Self {
        PartialColoring { colors: self.colors.iter().map(|c| c.map(|c| perm[c as usize])).collect() }
    }
}

impl EdgeColors for PartialColoring {
    fn edge_len(&self) -> usize {
        self.colors.len()
    }
    fn color(&self, e: usize) -> Option<Color> {
        self.colors[e]
    }
    fn set_color(&mut self, e: usize, c: Color) {
        self.colors[e] = Some(c);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub face: usize,
    pub colors: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub colored_edges: usize,
    pub total_edges: usize,
    pub checked_triangles: usize,
    pub total_triangles: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub status: VerifyStatus,
    pub violations: Vec<Violation>,
    pub coverage: Coverage,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == VerifyStatus::Pass
    }
}

/// Checks every facial triangle whose three edges are all colored.
pub fn verify_partial<C: EdgeColors + ?Sized>(e: &Embedding, c: &C) -> VerificationReport {
    assert_eq!(c.edge_len(), e.edge_count(), "coloring length must match the embedding");
    let mut violations = Vec::new();
    let mut checked = 0;
    let mut triangles = 0;
    for f in 0..e.face_count() {
        let darts = e.face_darts(f);
        if darts.len() != 3 {
            continue;
        }
        triangles += 1;
        let cols: Option<Vec<Color>> = darts.iter().map(|&d| c.color(d >> 1)).collect();
        let Some(cols) = cols else { continue };
        checked += 1;
        if cols[0] == cols[1] || cols[1] == cols[2] || cols[0] == cols[2] {
            violations.push(Violation { face: f, colors: cols });
        }
    }
    let colored_edges = (0..c.edge_len()).filter(|&i| c.color(i).is_some()).count();
    VerificationReport {
        status: if violations.is_empty() { VerifyStatus::Pass } else { VerifyStatus::Fail },
        violations,
        coverage: Coverage {
            colored_edges,
            total_edges: e.edge_count(),
            checked_triangles: checked,
            total_triangles: triangles,
        },
    }
}

/// Full check: `e` must be a triangulation and every edge colored.
pub fn verify_grunbaum<C: EdgeColors + ?Sized>(e: &Embedding, c: &C) -> Result<VerificationReport, ColoringError> {
    if !e.is_triangulation() {
        return Err(ColoringError::NotTriangulation);
    }
    if c.edge_len() != e.edge_count() {
        return Err(ColoringError::LengthMismatch { expected: e.edge_count(), got: c.edge_len() });
    }
    if (0..c.edge_len()).any(|i| c.color(i).is_none()) {
        return Err(ColoringError::ColoringIncomplete);
    }
    Ok(verify_partial(e, c))
}

/// Colors of the edges of `darts`, in order.
pub fn cycle_colors<C: EdgeColors + ?Sized>(c: &C, darts: &[usize]) -> Option<Vec<Color>> {
    darts.iter().map(|&d| c.color(d >> 1)).collect()
}
