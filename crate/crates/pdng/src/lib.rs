//! Exact power domination, domination, and zero forcing computations for
//! graphs of order at most 62, with Nordhaus-Gaddum bound checking, family
//! generators, and graph6 interchange.

pub mod catalog;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod ng;
pub mod solvers;
pub mod sweep;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, CanonicalForm, Graph6Error, Graph6Reader};
pub use solvers::{gamma, gamma_p, zero_forcing, SolveResult};
