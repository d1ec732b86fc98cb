//! Games built from other problems, and a seeded random instance generator.
//!
//! Each construction returns the game together with a [`ReductionMeta`]
//! naming every game vertex after the object it came from.

mod graph;
mod qbf;
mod random;

use serde::{Deserialize, Serialize};

pub use graph::{parse_graph, streach_to_game, vertex_cover_to_game, Graph};
pub use qbf::{cnf_to_game, parse_dimacs, parse_qdimacs, qbf_to_game, Cnf, Qbf, Quantifier};
pub use random::{random_game, RandomParams};

/// Vertex names and the size the construction promises.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMeta {
    /// `labels[v]` names game vertex `v`.
    pub labels: Vec<String>,
    pub expected_vertices: usize,
}
