//! Shipped embeddings and figure colorings, checked once on first use.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use super::CatalogError;
use crate::coloring::format::parse_gcol;
use crate::coloring::{
    classify_hexagon, classify_pentagon, classify_square, cycle_colors, letters, verify_partial, Color,
    PartialColoring,
};
use crate::embedding::format::parse_emb;
use crate::embedding::{Embedding, FaceCycle};

const MANIFEST: &str = include_str!("../../data/manifest.json");

const FILES: &[(&str, &str)] = &[
    ("octahedron.emb", include_str!("../../data/octahedron.emb")),
    ("icosahedron.emb", include_str!("../../data/icosahedron.emb")),
    ("k7.emb", include_str!("../../data/k7.emb")),
    ("c11cubed.emb", include_str!("../../data/c11cubed.emb")),
    ("k6_444a.emb", include_str!("../../data/k6_444a.emb")),
    ("k6_444b.emb", include_str!("../../data/k6_444b.emb")),
    ("k6_54.emb", include_str!("../../data/k6_54.emb")),
    ("k6_6.emb", include_str!("../../data/k6_6.emb")),
    ("h7k2.emb", include_str!("../../data/h7k2.emb")),
    ("c3c5.emb", include_str!("../../data/c3c5.emb")),
    ("figures/fig2-C3C5-1.gcol", include_str!("../../data/figures/fig2-C3C5-1.gcol")),
    ("figures/fig2-C3C5-2.gcol", include_str!("../../data/figures/fig2-C3C5-2.gcol")),
    ("figures/fig2-C3C5-3.gcol", include_str!("../../data/figures/fig2-C3C5-3.gcol")),
    ("figures/fig2-H7K2-1.gcol", include_str!("../../data/figures/fig2-H7K2-1.gcol")),
    ("figures/fig2-H7K2-2.gcol", include_str!("../../data/figures/fig2-H7K2-2.gcol")),
    ("figures/fig2-H7K2-3.gcol", include_str!("../../data/figures/fig2-H7K2-3.gcol")),
    ("figures/fig4-i.gcol", include_str!("../../data/figures/fig4-i.gcol")),
    ("figures/fig4-ii.gcol", include_str!("../../data/figures/fig4-ii.gcol")),
    ("figures/fig4-iii.gcol", include_str!("../../data/figures/fig4-iii.gcol")),
    ("figures/fig4-iv.gcol", include_str!("../../data/figures/fig4-iv.gcol")),
    ("figures/fig4-v.gcol", include_str!("../../data/figures/fig4-v.gcol")),
    ("figures/fig4-vi.gcol", include_str!("../../data/figures/fig4-vi.gcol")),
    ("figures/fig5-1.gcol", include_str!("../../data/figures/fig5-1.gcol")),
    ("figures/fig5-2.gcol", include_str!("../../data/figures/fig5-2.gcol")),
    ("figures/fig5-3.gcol", include_str!("../../data/figures/fig5-3.gcol")),
    ("figures/fig5-4.gcol", include_str!("../../data/figures/fig5-4.gcol")),
    ("figures/fig6-1.gcol", include_str!("../../data/figures/fig6-1.gcol")),
    ("figures/fig6-2.gcol", include_str!("../../data/figures/fig6-2.gcol")),
    ("figures/fig6-3.gcol", include_str!("../../data/figures/fig6-3.gcol")),
    ("figures/fig6-4.gcol", include_str!("../../data/figures/fig6-4.gcol")),
    ("figures/fig6-5.gcol", include_str!("../../data/figures/fig6-5.gcol")),
    ("figures/fig6-6.gcol", include_str!("../../data/figures/fig6-6.gcol")),
    ("figures/fig7-i.gcol", include_str!("../../data/figures/fig7-i.gcol")),
    ("figures/fig7-ii.gcol", include_str!("../../data/figures/fig7-ii.gcol")),
    ("figures/fig7-iii.gcol", include_str!("../../data/figures/fig7-iii.gcol")),
    ("figures/fig7-iv.gcol", include_str!("../../data/figures/fig7-iv.gcol")),
];

#[derive(Debug, Clone, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub embeddings: Vec<EmbeddingEntry>,
    pub figures: Vec<FigureEntry>,
    pub tables: RawTables,
}

#[derive(Debug, Clone, Deserialize)]
pub struct EmbeddingEntry {
    pub id: String,
    pub file: String,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    pub genus: usize,
    pub face_census: Vec<usize>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub special_faces: Vec<SpecialFace>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SpecialFace {
    pub name: String,
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FigureEntry {
    pub id: String,
    pub embedding: String,
    pub file: String,
    pub signatures: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RawTables {
    #[serde(rename = "k6-444b")]
    pub k444b: RowTable,
    #[serde(rename = "k6-444a")]
    pub k444a: RowTable,
    #[serde(rename = "k6-54")]
    pub k54: Table54,
    #[serde(rename = "k6-6")]
    pub k6: Table6,
    pub h7k2: QuadTable,
    pub c3c5: QuadTable,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RowTable {
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Row {
    pub types: Vec<String>,
    pub entry: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table54 {
    #[serde(rename = "square_A")]
    pub square_a: Half54,
    #[serde(rename = "square_B1")]
    pub square_b1: Half54,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Half54 {
    pub square: String,
    pub base: Vec<Base54>,
    pub reductions: Vec<Reduction54>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Base54 {
    pub sig: String,
    pub entry: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Reduction54 {
    pub sig: String,
    pub fixed: u8,
    pub targets: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table6 {
    pub base: Vec<Base6>,
    pub reductions: Vec<Reduction6>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Base6 {
    pub class: String,
    pub entry: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Reduction6 {
    pub class: String,
    pub letters: String,
    pub targets: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct QuadTable {
    pub rows: Vec<QuadRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct QuadRow {
    pub quad: String,
    pub entry: String,
}

/// A catalog embedding with its named non-triangular faces.
#[derive(Debug, Clone)]
pub struct CatalogEmbedding {
    pub id: String,
    pub embedding: Embedding,
    pub labels: Option<Vec<String>>,
    /// Named faces in their labeled orientation and starting edge.
    pub special: Vec<(String, FaceCycle)>,
}

impl CatalogEmbedding {
    pub fn special_face(&self, name: &str) -> &FaceCycle {
        &self.special.iter().find(|(n, _)| n == name).expect("named face").1
    }
}

#[derive(Debug, Clone)]
pub struct Figure {
    pub id: String,
    pub embedding: String,
    pub coloring: PartialColoring,
    pub signatures: Vec<String>,
}

struct Catalog {
    manifest: Manifest,
    embeddings: BTreeMap<String, CatalogEmbedding>,
    figures: Vec<Figure>,
}

fn file(name: &str) -> Result<&'static str, CatalogError> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| CatalogError::Data(format!("missing data file {name}")))
}

fn load() -> Result<Catalog, CatalogError> {
    let data = |m: String| CatalogError::Data(m);
    let manifest: Manifest = serde_json::from_str(MANIFEST).map_err(|e| data(e.to_string()))?;
    let mut embeddings = BTreeMap::new();
    for entry in &manifest.embeddings {
        let embedding = parse_emb(file(&entry.file)?).map_err(|e| data(format!("{}: {e}", entry.id)))?;
        let special = entry
            .special_faces
            .iter()
            .map(|s| {
                FaceCycle::from_vertices(&embedding, &s.cycle)
                    .map(|c| (s.name.clone(), c))
                    .map_err(|e| data(format!("{} face {}: {e}", entry.id, s.name)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let item = CatalogEmbedding { id: entry.id.clone(), embedding, labels: entry.labels.clone(), special };
        embeddings.insert(entry.id.clone(), item);
    }
    let mut figures = Vec::new();
    for entry in &manifest.figures {
        let host = embeddings
            .get(&entry.embedding)
            .ok_or_else(|| data(format!("{}: unknown embedding {}", entry.id, entry.embedding)))?;
        let coloring = parse_gcol(&host.embedding, file(&entry.file)?).map_err(|e| data(format!("{}: {e}", entry.id)))?;
        figures.push(Figure {
            id: entry.id.clone(),
            embedding: entry.embedding.clone(),
            coloring,
            signatures: entry.signatures.clone(),
        });
    }
    let cat = Catalog { manifest, embeddings, figures };
    check(&cat)?;
    Ok(cat)
}

fn is_face(e: &Embedding, c: &FaceCycle) -> bool {
    let d0 = c.darts()[0];
    let face = e.face_darts(e.face_of(d0));
    if face.len() != c.len() {
        return false;
    }
    let start = face.iter().position(|&d| d == d0).expect("dart in its face");
    (0..face.len()).all(|i| face[(start + i) % face.len()] == c.darts()[i])
}

/// Signatures a figure induces on its embedding's named faces.
pub fn induced_signatures(host: &CatalogEmbedding, c: &PartialColoring) -> Result<Vec<String>, CatalogError> {
    let bad = |what: &str| CatalogError::Data(format!("{}: cannot classify {what}", host.id));
    let colors = |name: &str| -> Result<Vec<Color>, CatalogError> {
        cycle_colors(c, host.special_face(name).darts()).ok_or_else(|| bad(name))
    };
    let square = |name: &str| -> Result<String, CatalogError> {
        let s = colors(name)?;
        classify_square([s[0], s[1], s[2], s[3]]).map(|sig| sig.kind.to_string()).map_err(|_| bad(name))
    };
    Ok(match host.id.as_str() {
        "k6-444a" | "k6-444b" => vec![square("S1")?, square("S2")?, square("S3")?],
        "k6-54" => {
            let p = colors("pentagon")?;
            let q = colors("square")?;
            let hept = [p[0], p[1], q[1], q[2], q[3], p[3], p[4]];
            let sig = classify_pentagon([p[0], p[1], p[2], p[3], p[4]]).map_err(|_| bad("pentagon"))?;
            vec![letters(&hept), sig.to_string(), square("square")?]
        }
        "k6-6" => {
            let h = colors("hexagon")?;
            let w = classify_hexagon([h[0], h[1], h[2], h[3], h[4], h[5]]).map_err(|_| bad("hexagon"))?;
            vec![w.class.to_string()]
        }
        "h7k2" | "c3c5" => vec![square("quad")?],
        _ => Vec::new(),
    })
}

fn check(cat: &Catalog) -> Result<(), CatalogError> {
    let data = |m: String| CatalogError::Data(m);
    for entry in &cat.manifest.embeddings {
        let item = &cat.embeddings[&entry.id];
        let e = &item.embedding;
        let got = (e.vertex_count(), e.edge_count(), e.genus(), e.trace_faces().census());
        let want = (entry.vertices, entry.edges, entry.genus, entry.face_census.clone());
        if got != want {
            return Err(data(format!("{}: expected {want:?}, found {got:?}", entry.id)));
        }
        for (name, c) in &item.special {
            if !is_face(e, c) {
                return Err(data(format!("{}: {name} is not a face in its stated orientation", entry.id)));
            }
        }
    }
    for fig in &cat.figures {
        let host = &cat.embeddings[&fig.embedding];
        if !verify_partial(&host.embedding, &fig.coloring).passed() {
            return Err(data(format!("{}: not a partial Grünbaum coloring", fig.id)));
        }
        let sigs = induced_signatures(host, &fig.coloring)?;
        if sigs != fig.signatures {
            return Err(data(format!("{}: induces {sigs:?}, manifest says {:?}", fig.id, fig.signatures)));
        }
    }
    Ok(())
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| load().unwrap_or_else(|e| panic!("catalog self-check failed: {e}")))
}

/// Reloads and rechecks the shipped data from scratch.
pub fn self_check() -> Result<(), CatalogError> {
    load().map(|_| ())
}

pub fn manifest() -> &'static Manifest {
    &catalog().manifest
}

pub fn catalog_embedding(id: &str) -> &'static CatalogEmbedding {
    catalog().embeddings.get(id).unwrap_or_else(|| panic!("no catalog embedding `{id}`"))
}

pub fn figures() -> &'static [Figure] {
    &catalog().figures
}

pub fn figure(id: &str) -> Result<&'static Figure, CatalogError> {
    catalog()
        .figures
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_data_passes_self_check() {
        self_check().unwrap();
        assert_eq!(figures().len(), 26);
    }

    #[test]
    fn stated_figures() {
        assert_eq!(figure("fig4-v").unwrap().signatures, ["A", "A", "A"]);
        assert_eq!(figure("fig7-i").unwrap().signatures, ["ttpppp"]);
        assert_eq!(figure("fig6-1").unwrap().signatures, ["tptpptg", "2;5", "B1"]);
        assert!(matches!(figure("fig9-x"), Err(CatalogError::UnknownId(_))));
    }
}
