//! Grünbaum colorings of sphere and torus triangulations.
//!
//! A Grünbaum coloring assigns one of three colors to every edge so that the three
//! edges of each face are colored differently. The crate provides rotation-system
//! embeddings, coloring verification and classification, chromatic number tools, a
//! catalog of special embeddings with their case tables, and solvers.

pub mod budget;
pub mod catalog;
pub mod chroma;
pub mod coloring;
pub mod embedding;
pub mod graph;
pub mod solver;

pub use budget::Budget;
pub use coloring::{verify_grunbaum, EdgeColoring, PartialColoring};
pub use embedding::Embedding;
pub use solver::{solve_exact, solve_torus, Method, SolveReport, Status};
