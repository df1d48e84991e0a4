//! Interdictor side: which edges to delete so the locator's optimum is as
//! large as possible.
//!
//! [`oracle`] solves any instance exactly by enumerating every
//! budget-feasible edge set. The remaining solvers cover the polynomial
//! special cases (unit-cost paths with `p = B + 1`, unit trees with one
//! interdicted edge) and are checked against the oracle in the test suites.

mod oracle;
mod path;
mod route;
mod tree;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::median::{solve_p_median, FacilitySet, MedianValue};

pub use oracle::{feasible_strategies, oracle};
pub use path::{
    crossing_vector, interdiction_matrix, matrix_row, solve_path_arbitrary, solve_path_unit,
    CrossingVector, InterdictionMatrix,
};
pub use route::{check_preconditions, choose_algorithm, solve};
pub use tree::{greedy_closest_leaves, solve_tree_unit_b1};

/// A set of interdicted edges, sorted ascending, with its summed cost.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InterdictionStrategy {
    edges: Vec<EdgeId>,
    total_cost: u64,
}

impl InterdictionStrategy {
    /// Validates ids against `graph` and sums their costs.
    pub fn new(graph: &Graph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("edge {} listed twice", w[0])));
        }
        if let Some(&bad) = edges.iter().find(|&&e| e == 0 || e > graph.edge_count()) {
            return Err(Error::Input(format!("unknown edge id {bad}")));
        }
        let total_cost = edges.iter().map(|&e| graph.edge(e).cost).sum();
        Ok(InterdictionStrategy { edges, total_cost })
    }

    pub fn empty() -> Self {
        InterdictionStrategy {
            edges: Vec::new(),
            total_cost: 0,
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn total_cost(&self) -> u64 {
        self.total_cost
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl fmt::Display for InterdictionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.edges.iter().map(|e| format!("e{e}")).join(", ")
        )
    }
}

/// Which solver produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Exhaustive enumeration of feasible strategies.
    Oracle,
    /// Unit path: cut the edges next to the leaves.
    PathUnit,
    /// Path with arbitrary lengths: crossing-count matrix.
    PathMatrix,
    /// Unit tree, one cut: the leaf closest to a 1-median.
    TreeLeaf,
    /// Cut the `B` leaves closest to a 1-median at once. Not exact.
    GreedyHeuristic,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Oracle,
        Algorithm::PathUnit,
        Algorithm::PathMatrix,
        Algorithm::TreeLeaf,
        Algorithm::GreedyHeuristic,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::PathUnit => "path-unit",
            Algorithm::PathMatrix => "path-matrix",
            Algorithm::TreeLeaf => "tree-leaf",
            Algorithm::GreedyHeuristic => "greedy-heuristic",
        }
    }

    pub fn is_exact(self) -> bool {
        self != Algorithm::GreedyHeuristic
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| Error::Input(format!("unknown algorithm `{s}`")))
    }
}

/// Algorithm requested by a caller: a specific one, or routing by instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selector {
    #[default]
    Auto,
    Use(Algorithm),
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            Ok(Selector::Auto)
        } else {
            s.parse().map(Selector::Use)
        }
    }
}

/// An interdiction strategy, the locator's optimal answer to it, and the
/// resulting objective value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub strategy: InterdictionStrategy,
    pub locator_response: FacilitySet,
    pub value: MedianValue,
    pub algorithm: Algorithm,
}

/// The locator's best response once `strategy` has been interdicted.
pub fn strategy_value(
    graph: &Graph,
    strategy: &InterdictionStrategy,
    p: usize,
    budget: u64,
) -> Result<(FacilitySet, MedianValue)> {
    if strategy.total_cost() > budget {
        return Err(Error::Budget {
            cost: strategy.total_cost(),
            budget,
        });
    }
    let rest = graph.remove_edges(strategy.edges())?;
    solve_p_median(&rest.graph, p)
}
