//! Directed width decompositions.
//!
//! Directed path decompositions, DAG-decompositions, Kelly-decompositions
//! and arboreal decompositions of simple digraphs: validity checking,
//! conversion, separator-driven divide-and-conquer construction, and exact
//! oracles for small inputs.

pub mod approx_dpw;
pub mod approx_dtw;
pub mod decomposition;
pub mod digraph;
pub mod error;
pub mod io;
pub mod oracles;
pub mod scc;
pub mod separator;
pub mod vertex_set;

pub use decomposition::{
    ArborealDecomposition, DagDecomposition, Decomposition, DecompositionKind,
    DirectedPathDecomposition, KellyDecomposition, Skeleton, SkeletonKind, ValidationReport,
};
pub use digraph::{is_guarding, is_normal, reachable_set, Digraph, Subgraph};
pub use error::{Error, Result};
pub use scc::{scc_condensation, scc_condensation_within, SccCondensation};
pub use separator::{Alpha, SeparatorResult, SeparatorStrategy, StrategyMode};
pub use vertex_set::VertexSet;
