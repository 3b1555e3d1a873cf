//! Boolean functions arising from hypergraphs, multigraphs and vector families, and the
//! matroid rank axioms with greedy bases.

pub mod graph;
pub mod hypergraph;
pub mod matroid;
pub mod vectors;

pub use graph::{graphic_rank, MultiGraph};
pub use hypergraph::{gamma, iota, is_connected, Hypergraph};
pub use matroid::{basis_of, extend_basis, is_matroid_rank};
pub use vectors::{linear_rank, Field, VectorFamily};
