use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::instance::check_p;
use crate::interdiction::{Algorithm, InterdictionStrategy, SolveResult};
use crate::median::{p_median_value, solve_p_median, MedianValue};

/// Refuse to materialize more candidate strategies than this.
const MAX_STRATEGIES: usize = 20_000_000;

/// Every edge set whose summed cost fits the budget, in lexicographic order
/// of the sorted id lists (the empty set first).
pub fn feasible_strategies(graph: &Graph, budget: u64) -> Result<Vec<Vec<EdgeId>>> {
    fn extend(
        graph: &Graph,
        next: EdgeId,
        remaining: u64,
        current: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) -> Result<()> {
        if out.len() >= MAX_STRATEGIES {
            return Err(Error::Size(format!(
                "more than {MAX_STRATEGIES} feasible interdiction strategies"
            )));
        }
        out.push(current.clone());
        for e in next..=graph.edge_count() {
            let cost = graph.edge(e).cost;
            if cost <= remaining {
                current.push(e);
                extend(graph, e + 1, remaining - cost, current, out)?;
                current.pop();
            }
        }
        Ok(())
    }

    let mut out = Vec::new();
    extend(graph, 1, budget, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// Exact interdiction by exhaustive search.
///
/// Every budget-feasible edge set is evaluated (in parallel) by solving the
/// p-median on the remaining graph. The maximum wins; ties go to the
/// lexicographically smallest edge set, and the reported locator response is
/// the lexicographically smallest optimal facility set. Strategies that
/// disconnect the graph into more than `p` components score `Infeasible`,
/// which beats every finite value.
pub fn oracle(graph: &Graph, p: usize, budget: u64) -> Result<SolveResult> {
    check_p(graph, p)?;
    let candidates = feasible_strategies(graph, budget)?;
    let values: Vec<MedianValue> = candidates
        .par_iter()
        .map(|edges| {
            let rest = graph.remove_edges(edges)?;
            p_median_value(&rest.graph, p)
        })
        .collect::<Result<_>>()?;

    let mut best = 0;
    for (i, value) in values.iter().enumerate().skip(1) {
        if *value > values[best] {
            best = i;
        }
    }
    let strategy = InterdictionStrategy::new(graph, candidates[best].clone())?;
    let rest = graph.remove_edges(strategy.edges())?;
    let (locator_response, value) = solve_p_median(&rest.graph, p)?;
    debug_assert_eq!(value, values[best]);
    Ok(SolveResult {
        strategy,
        locator_response,
        value,
        algorithm: Algorithm::Oracle,
    })
}
