//! Exact-arithmetic toolkit for adjacency-spectrum inertia of graphs.
//!
//! The central quantity is the inertia triple `(n_plus, n_zero, n_minus)` of
//! a graph's adjacency matrix, computed exactly by symmetric congruence
//! elimination over the integers (no eigenvalue is ever classified by a
//! floating-point tolerance). On top of that sit graph constructions, twin
//! reduction, and a registry of spectral inequality checkers with structured
//! holds / tight / violated verdicts.
//!
//! Graphs are exchanged in graph6 (and sparse6 on input) one per line, which
//! is what the common exhaustive generators emit.

pub mod charpoly;
pub mod checks;
pub mod constructions;
pub mod floatspec;
pub mod format;
pub mod generate;
pub mod graph;
pub mod inertia;
pub mod matrix;
pub mod reduction;

pub use graph::{Graph, GraphError};
pub use inertia::Inertia;
pub use matrix::{adjacency_matrix, laplacian_matrix, signless_laplacian_matrix, IntSymMatrix};

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};
