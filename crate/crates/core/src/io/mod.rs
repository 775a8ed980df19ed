//! Text formats: a flat arc list for digraphs and JSON for decompositions.

mod decomposition_file;
mod graph_file;

pub use decomposition_file::{parse_decomposition, serialize_decomposition};
pub use graph_file::{parse_digraph, serialize_digraph};
