//! Command implementations behind the `grunbaum` binary.
//!
//! Every command returns an [`Outcome`]: the text to print (human or JSON) and the exit
//! code. Input problems surface as [`CliError`] and always map to exit code 2.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use grunbaum::budget::{Budget, DEFAULT_TIME};
use grunbaum::catalog::{self, altshuler, fill_faces, gen_named, random_refinement, K6Variant, Named};
use grunbaum::chroma::classify_critical;
use grunbaum::coloring::format::{parse_gcol, write_gcol};
use grunbaum::coloring::{
    kempe_change, verify_grunbaum, verify_partial, Color, PartialColoring,
    VerificationReport,
};
use grunbaum::embedding::format::{parse_emb, write_emb};
use grunbaum::embedding::Embedding;
use grunbaum::solver::{torus_chromatic_number, Registry, SolveContext, SolveError, SolveReport, Status};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {msg}")]
    Parse { path: PathBuf, msg: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn parse(path: &Path, err: impl ToString) -> Self {
        CliError::Parse { path: path.to_path_buf(), msg: err.to_string() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "grunbaum", version, about = "Grünbaum edge colorings of sphere and torus triangulations")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the exhaustive search.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Face census, genus and whether every face is a triangle.
    Faces { file: PathBuf },
    /// Find a Grünbaum coloring.
    Solve(SolveArgs),
    /// Check a coloring against an embedding.
    Verify { emb: PathBuf, gcol: PathBuf },
    /// Write a generated embedding.
    Gen {
        #[command(subcommand)]
        generator: Generator,
        /// Output file; stdout when absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Chromatic number of the embedded graph.
    Chromatic {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Swap two colors along the Kempe chain through an edge.
    Kempe {
        emb: PathBuf,
        gcol: PathBuf,
        /// Seed edge as `u,v`.
        #[arg(long, value_parser = parse_pair)]
        edge: (usize, usize),
        /// Color pair as `a,b`.
        #[arg(long, value_parser = parse_pair)]
        colors: (usize, usize),
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the solving methods.
    Methods,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: PathBuf,
    /// auto (alias pipeline), exact, tait, altshuler, k7 or critical.
    #[arg(long, default_value = "auto")]
    pub method: String,
    /// Search node limit; defaults to GRUNBAUM_BUDGET or 10^7.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Edge colors the result must keep (exhaustive search only).
    #[arg(long)]
    pub fixed: Option<PathBuf>,
    /// Where to write the coloring.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the JSON report.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Generator {
    /// Altshuler grid T(rows, cols, twist).
    Altshuler { rows: usize, cols: usize, twist: usize },
    /// A named embedding: k7, c11^3, h7+k2, c3+c5, octahedron, icosahedron.
    Named { name: String },
    /// K6 on the torus with face census 444A, 444B, 54 or 6.
    K6 {
        variant: String,
        /// Triangulate the non-triangular faces.
        #[arg(long)]
        fill: bool,
    },
    /// Stellate random triangles of an existing embedding.
    Refine {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Triangulate the non-triangular faces of an existing embedding.
    Fill { file: PathBuf },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad number `{x}`"));
    Ok((num(a)?, num(b)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    fn new(code: u8, text: String, json: Value) -> Self {
        Outcome { code, text, json }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            self.json.to_string()
        } else {
            self.text.clone()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load_emb(path: &Path) -> Result<Embedding, CliError> {
    parse_emb(&read(path)?).map_err(|e| CliError::parse(path, e))
}

pub fn load_gcol(e: &Embedding, path: &Path) -> Result<PartialColoring, CliError> {
    parse_gcol(e, &read(path)?).map_err(|err| CliError::parse(path, err))
}

fn budget(nodes: Option<u64>) -> Budget {
    match nodes {
        Some(n) => Budget::new(n, Some(DEFAULT_TIME)),
        None => Budget::from_env(),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Faces { file } => cmd_faces(file),
        Command::Solve(args) => cmd_solve(args, cli.seed, cli.threads),
        Command::Verify { emb, gcol } => cmd_verify(emb, gcol),
        Command::Gen { generator, out } => cmd_gen(generator, out.as_deref(), cli.seed),
        Command::Chromatic { file, budget } => cmd_chromatic(file, *budget),
        Command::Kempe { emb, gcol, edge, colors, out } => cmd_kempe(emb, gcol, *edge, *colors, out.as_deref()),
        Command::Methods => Ok(cmd_methods()),
    }
}

pub fn cmd_faces(file: &Path) -> Result<Outcome, CliError> {
    let e = load_emb(file)?;
    let census = e.trace_faces().census();
    let list: Vec<String> = census.iter().map(usize::to_string).collect();
    let tri = e.is_triangulation();
    let text = format!(
        "faces: {} genus: {} triangulation: {}",
        list.join(","),
        e.genus(),
        if tri { "yes" } else { "no" }
    );
    let json = json!({
        "vertices": e.vertex_count(),
        "edges": e.edge_count(),
        "faces": census,
        "genus": e.genus(),
        "triangulation": tri,
    });
    Ok(Outcome::new(EXIT_OK, text, json))
}

fn report_text(r: &SolveReport) -> String {
    let mut s = r.status.to_string();
    if let Some(m) = r.method {
        s.push_str(&format!(" method: {m}"));
    }
    s.push_str(&format!(" nodes: {} ms: {}", r.stats.nodes, r.stats.millis));
    for t in &r.trace {
        s.push_str(&format!("\n  {t}"));
    }
    s
}

pub fn cmd_solve(args: &SolveArgs, seed: u64, threads: usize) -> Result<Outcome, CliError> {
    let e = load_emb(&args.file)?;
    let registry = Registry::standard();
    let strategy = registry.get(&args.method).ok_or_else(|| {
        CliError::Usage(format!("unknown method `{}` (try {})", args.method, registry.names().join(", ")))
    })?;
    let fixed = args.fixed.as_deref().map(|p| load_gcol(&e, p)).transpose()?;
    let ctx = SolveContext { budget: budget(args.budget), seed, threads: threads.max(1), fixed };
    let report = match strategy.solve(&e, &ctx) {
        Ok(r) => r,
        Err(err @ (SolveError::NotTriangulation | SolveError::UnsupportedGenus(_))) => {
            return Err(CliError::parse(&args.file, err));
        }
        Err(err) => {
            let json = json!({ "status": Status::Unknown.to_string(), "method": Value::Null, "error": err.to_string() });
            if let Some(p) = &args.report {
                write(p, &serde_json::to_string_pretty(&json).unwrap_or_default())?;
            }
            return Ok(Outcome::new(EXIT_NEGATIVE, format!("UNKNOWN {}: {err}", strategy.name()), json));
        }
    };
    let mut json = report.to_json(&e);
    json["seed"] = json!(seed);
    let code = match (&report.status, &report.coloring) {
        (Status::Found, Some(c)) => {
            let check = verify_grunbaum(&e, c).map(|v| v.passed()).unwrap_or(false);
            if !check {
                json["status"] = json!(Status::Unknown.to_string());
                json["error"] = json!("coloring failed re-verification");
                EXIT_NEGATIVE
            } else {
                if let Some(out) = &args.out {
                    write(out, &write_gcol(&e, c))?;
                }
                EXIT_OK
            }
        }
        _ => EXIT_NEGATIVE,
    };
    if let Some(p) = &args.report {
        write(p, &serde_json::to_string_pretty(&json).unwrap_or_default())?;
    }
    Ok(Outcome::new(code, report_text(&report), json))
}

fn verification_text(r: &VerificationReport, complete: bool) -> String {
    let mut s = format!(
        "{} colored: {}/{} checked triangles: {}/{}",
        if r.passed() { "PASS" } else { "FAIL" },
        r.coverage.colored_edges,
        r.coverage.total_edges,
        r.coverage.checked_triangles,
        r.coverage.total_triangles,
    );
    if !complete {
        s.push_str(" (partial)");
    }
    for v in &r.violations {
        s.push_str(&format!("\n  face {}: colors {:?}", v.face, v.colors));
    }
    s
}

pub fn cmd_verify(emb: &Path, gcol: &Path) -> Result<Outcome, CliError> {
    let e = load_emb(emb)?;
    let c = load_gcol(&e, gcol)?;
    let complete = c.is_complete();
    let report = if complete && e.is_triangulation() {
        verify_grunbaum(&e, &c).map_err(|err| CliError::parse(gcol, err))?
    } else {
        verify_partial(&e, &c)
    };
    let mut json = serde_json::to_value(&report).unwrap_or(Value::Null);
    json["complete"] = json!(complete);
    let code = if report.passed() { EXIT_OK } else { EXIT_NEGATIVE };
    Ok(Outcome::new(code, verification_text(&report, complete), json))
}

fn generate(g: &Generator, seed: u64) -> Result<Embedding, CliError> {
    Ok(match g {
        Generator::Altshuler { rows, cols, twist } => {
            altshuler(*rows, *cols, *twist).map_err(|e| CliError::Usage(e.to_string()))?.embedding
        }
        Generator::Named { name } => match gen_named(name).map_err(|e| CliError::Usage(e.to_string()))? {
            Named::Embedding(e) => e,
            Named::Graph(_) => return Err(CliError::Usage(format!("`{name}` is a graph without an embedding"))),
        },
        Generator::K6 { variant, fill } => {
            let v: K6Variant = variant.parse().map_err(|e: catalog::CatalogError| CliError::Usage(e.to_string()))?;
            let e = catalog::k6(v);
            if *fill {
                fill_faces(&e)
            } else {
                e
            }
        }
        Generator::Refine { file, steps } => random_refinement(&load_emb(file)?, *steps, seed),
        Generator::Fill { file } => fill_faces(&load_emb(file)?),
    })
}

pub fn cmd_gen(g: &Generator, out: Option<&Path>, seed: u64) -> Result<Outcome, CliError> {
    let e = generate(g, seed)?;
    let text = write_emb(&e);
    let json = json!({
        "vertices": e.vertex_count(),
        "edges": e.edge_count(),
        "genus": e.genus(),
        "rotation": e.rotation(),
    });
    match out {
        Some(p) => {
            write(p, &text)?;
            let msg = format!("wrote {} ({} vertices, genus {})", p.display(), e.vertex_count(), e.genus());
            Ok(Outcome::new(EXIT_OK, msg, json))
        }
        None => Ok(Outcome::new(EXIT_OK, text.trim_end().to_string(), json)),
    }
}

pub fn cmd_chromatic(file: &Path, nodes: Option<u64>) -> Result<Outcome, CliError> {
    let e = load_emb(file)?;
    let g = e.graph();
    let b = budget(nodes);
    let Ok(chi) = torus_chromatic_number(&g, &b) else {
        return Ok(Outcome::new(EXIT_NEGATIVE, "UNKNOWN".into(), json!({ "chromatic_number": Value::Null })));
    };
    let mut json = json!({ "chromatic_number": chi });
    let mut text = chi.to_string();
    if chi == 6 {
        match classify_critical(&g, &b) {
            Ok(m) => {
                json["pattern"] = json!(m.pattern.to_string());
                text.push_str(&format!(" ({})", m.pattern));
            }
            Err(err) => json["pattern_error"] = json!(err.to_string()),
        }
    }
    Ok(Outcome::new(EXIT_OK, text, json))
}

pub fn cmd_kempe(
    emb: &Path,
    gcol: &Path,
    edge: (usize, usize),
    colors: (usize, usize),
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let e = load_emb(emb)?;
    let c = load_gcol(&e, gcol)?;
    let (u, v) = edge;
    let seed = (u.max(v) < e.vertex_count())
        .then(|| e.edge_index(u, v))
        .flatten()
        .ok_or_else(|| CliError::Usage(format!("{u}-{v} is not an edge")))?;
    if colors.0 > 2 || colors.1 > 2 {
        return Err(CliError::Usage("colors must be 0, 1 or 2".into()));
    }
    let pair = (colors.0 as Color, colors.1 as Color);
    let changed = kempe_change(&e, &c, seed, pair).map_err(|err| CliError::Usage(err.to_string()))?;
    let swapped = (0..e.edge_count()).filter(|&i| c.get(i) != changed.get(i)).count();
    let text = write_gcol(&e, &changed);
    let json = json!({ "swapped": swapped, "edge": [u, v], "colors": [colors.0, colors.1] });
    match out {
        Some(p) => {
            write(p, &text)?;
            Ok(Outcome::new(EXIT_OK, format!("swapped {swapped} edges, wrote {}", p.display()), json))
        }
        None => Ok(Outcome::new(EXIT_OK, text.trim_end().to_string(), json)),
    }
}

pub fn cmd_methods() -> Outcome {
    let r = Registry::standard();
    let text = r.iter().map(|s| format!("{:<10} {}", s.name(), s.summary())).collect::<Vec<_>>().join("\n");
    let json = json!(r.iter().map(|s| json!({ "name": s.name(), "summary": s.summary() })).collect::<Vec<_>>());
    Outcome::new(EXIT_OK, text, json)
}
