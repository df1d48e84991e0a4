//! Unit-cost paths with `p = B + 1`: every component left by the cuts gets
//! exactly one facility.
//!
//! With unit vertex weights the 1-median of a path sits at the middle vertex
//! whatever the edge lengths, so edge `i` of a `k`-vertex segment is crossed
//! `min(i, k - i)` times. These crossing counts price every segment, and
//! stacking them per candidate cut gives the interdiction matrix.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::interdiction::{Algorithm, InterdictionStrategy, SolveResult};
use crate::median::{unit_path_1median, FacilitySet, MedianValue};

/// How often each edge of a `k`-vertex path is crossed by the optimal
/// 1-median assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingVector(pub Vec<u64>);

impl CrossingVector {
    /// The segment's 1-median optimum under the given edge lengths.
    pub fn dot(&self, lengths: &[u64]) -> u64 {
        debug_assert_eq!(self.0.len(), lengths.len());
        self.0.iter().zip(lengths).map(|(s, l)| s * l).sum()
    }
}

/// `s_i = min(i, k - i)` for `i = 1..k-1`; empty for `k <= 1`.
pub fn crossing_vector(k: usize) -> CrossingVector {
    CrossingVector((1..k.max(1)).map(|i| i.min(k - i) as u64).collect())
}

/// Row `t` is the crossing pattern left after cutting edge `t`: the
/// crossing vector of the `t`-vertex left part, a zero for the cut edge, and
/// the crossing vector of the `n - t`-vertex right part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterdictionMatrix {
    pub rows: Vec<Vec<u64>>,
}

impl InterdictionMatrix {
    /// Objective value after each single cut, indexed by `t - 1`.
    pub fn apply(&self, lengths: &[u64]) -> Vec<u64> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(lengths).map(|(s, l)| s * l).sum())
            .collect()
    }
}

/// Row `t` (1-based) of the interdiction matrix for an `n`-vertex path.
pub fn matrix_row(n: usize, t: usize) -> Vec<u64> {
    debug_assert!((1..n).contains(&t));
    let mut row = crossing_vector(t).0;
    row.push(0);
    row.extend(crossing_vector(n - t).0);
    row
}

/// The `(n-1) x (n-1)` interdiction matrix; empty when `n < 2`.
pub fn interdiction_matrix(n: usize) -> InterdictionMatrix {
    InterdictionMatrix {
        rows: (1..n).map(|t| matrix_row(n, t)).collect(),
    }
}

/// Unit path `1 - ... - n`, unit costs, `p = B + 1`.
///
/// Cutting the `B` edges at the left end leaves `B` singletons and a path
/// on `n - B` vertices, whose 1-median optimum is the answer. Cutting at the
/// right end is equally good.
pub fn solve_path_unit(n: usize, budget: u64) -> Result<SolveResult> {
    if n == 0 {
        return Err(Error::Input("path needs at least one vertex".into()));
    }
    let cuts = usize::try_from(budget)
        .ok()
        .filter(|&b| b < n)
        .ok_or_else(|| {
            Error::Input(format!(
                "budget {budget} exceeds the {} edges of the path",
                n - 1
            ))
        })?;
    let (medians, value) = unit_path_1median(n - cuts);
    let mut facilities: Vec<Vertex> = (1..=cuts).collect();
    facilities.push(cuts + medians[0]);
    let graph = Graph::unit_path(n);
    Ok(SolveResult {
        strategy: InterdictionStrategy::new(&graph, (1..=cuts).collect())?,
        locator_response: FacilitySet::new(facilities)?,
        value: MedianValue::Finite(value),
        algorithm: Algorithm::PathUnit,
    })
}

/// Path `1 - ... - n` with edge `i` of length `lengths[i-1]`, unit costs and
/// `p = B + 1`.
///
/// For one cut the best row of the interdiction matrix wins (smallest `t`
/// on ties). For more cuts every `B`-subset of edges is priced segment by
/// segment with crossing vectors; the lexicographically first maximum wins.
pub fn solve_path_arbitrary(lengths: &[u64], budget: u64) -> Result<SolveResult> {
    let n = lengths.len() + 1;
    let cuts = usize::try_from(budget)
        .ok()
        .filter(|&b| b < n)
        .ok_or_else(|| {
            Error::Input(format!(
                "budget {budget} exceeds the {} edges of the path",
                n - 1
            ))
        })?;

    let (edges, value) = match cuts {
        0 => (Vec::new(), segment_value(lengths)),
        1 => {
            let mut best = (1, 0);
            for (i, v) in interdiction_matrix(n)
                .apply(lengths)
                .into_iter()
                .enumerate()
            {
                if i == 0 || v > best.1 {
                    best = (i + 1, v);
                }
            }
            (vec![best.0], best.1)
        }
        _ => {
            let mut best: Option<(Vec<usize>, u64)> = None;
            for cut in (1..n).combinations(cuts) {
                let v = cut_value(lengths, &cut);
                if best.as_ref().is_none_or(|(_, b)| v > *b) {
                    best = Some((cut, v));
                }
            }
            best.expect("at least one subset when cuts < n")
        }
    };

    let graph = Graph::path(lengths);
    let facilities = segments(n, &edges)
        .map(|(first, last)| first + (last - first) / 2)
        .collect();
    Ok(SolveResult {
        strategy: InterdictionStrategy::new(&graph, edges)?,
        locator_response: FacilitySet::new(facilities)?,
        value: MedianValue::Finite(value),
        algorithm: Algorithm::PathMatrix,
    })
}

/// 1-median optimum of the path segment with these edge lengths.
fn segment_value(lengths: &[u64]) -> u64 {
    crossing_vector(lengths.len() + 1).dot(lengths)
}

/// Objective after cutting the (ascending) edges `cut`.
fn cut_value(lengths: &[u64], cut: &[usize]) -> u64 {
    segments(lengths.len() + 1, cut)
        .map(|(first, last)| segment_value(&lengths[first - 1..last - 1]))
        .sum()
}

/// `(first, last)` vertex of each segment left by cutting ascending edges.
fn segments(n: usize, cut: &[usize]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    let starts = std::iter::once(1).chain(cut.iter().map(|&t| t + 1));
    let ends = cut.iter().copied().chain(std::iter::once(n));
    starts.zip(ends)
}
