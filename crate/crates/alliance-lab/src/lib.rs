//! Global offensive alliances in graphs and Cartesian products.
//!
//! The crate provides exact solvers for alliance and domination numbers,
//! certified verifiers for the underlying set predicates, closed formulas
//! and general bounds for Cartesian products, explicit alliance
//! constructions, a spectral lower bound, and a conjecture-sweeping
//! harness. See the `examples/` directory for a runnable tour.

pub mod cli;
pub mod conjecture;
pub mod constructions;
pub mod edgelist;
pub mod exact;
pub mod formulas;
pub mod graph;
mod rng;
pub mod set;
pub mod spectral;
pub mod verify;

pub use graph::{
    build_family, cartesian_product, FamilySpec, Graph, GraphError, ProductGraph,
};
pub use set::VertexSet;
pub use verify::{Certificate, PartitionMode, VerifyError, Witness};
