//! Exact solvers for the p-median location interdiction problem.
//!
//! An interdictor deletes a budget-feasible set of edges, then a locator
//! places `p` facilities minimizing the sum of vertex-to-nearest-facility
//! distances on what is left. The interdictor maximizes the locator's optimum.
//!
//! The crate provides:
//!
//! * [`graph`]: undirected graphs with edge lengths and interdiction costs.
//! * [`median`]: the locator side (objective, exact p-median, 1-median on trees).
//! * [`interdiction`]: the interdictor side (exhaustive oracle and the
//!   polynomial special cases for paths and unit trees).
//! * [`reduction`]: equal partition → bounded-ratio knapsack → tree gadget.
//! * [`io`]: the text instance format, result serialization, generators and
//!   the bundled fixture corpus.
//!
//! Vertex and edge ids are 1-based everywhere.

pub mod error;
pub mod graph;
pub mod instance;
pub mod interdiction;
pub mod io;
pub mod median;
pub mod reduction;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
pub use graph::{
    Component, Edge, EdgeId, Graph, GraphShape, RootedTree, Subgraph, Vertex, VertexMap,
};
pub use instance::Instance;
pub use interdiction::{
    Algorithm, CrossingVector, InterdictionMatrix, InterdictionStrategy, Selector, SolveResult,
};
pub use median::{FacilitySet, MedianValue, OneMedianValues};
