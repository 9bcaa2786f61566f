//! Havel-Hakimi residue, the Maxine heuristic, MDI vertices and the
//! forbidden-structure family around them, with exhaustive verification
//! over small graphs and graph6 corpora.

pub mod canon;
pub mod degseq;
pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod heuristics;
pub mod independence;
pub mod patterns;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
