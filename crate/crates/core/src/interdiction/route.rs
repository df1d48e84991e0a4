//! Picking a solver for an instance and running it on the instance's own
//! vertex and edge ids.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphShape, Vertex};
use crate::instance::Instance;
use crate::interdiction::{
    greedy_closest_leaves, oracle, solve_path_arbitrary, solve_path_unit, solve_tree_unit_b1,
    Algorithm, InterdictionStrategy, Selector, SolveResult,
};
use crate::median::FacilitySet;

/// Checks that `algorithm` may run on `instance`; the error names the first
/// violated precondition.
pub fn check_preconditions(instance: &Instance, algorithm: Algorithm) -> Result<()> {
    let g = &instance.graph;
    let shape = g.classify();
    let fail = |msg: String| Err(Error::Precondition(format!("{algorithm}: {msg}")));
    let one_per_component = instance.p as u64 == instance.budget + 1;

    match algorithm {
        Algorithm::Oracle => Ok(()),
        Algorithm::PathUnit | Algorithm::PathMatrix => {
            if !matches!(shape, GraphShape::Path(_)) {
                return fail(format!("needs a path, found a {shape}"));
            }
            if algorithm == Algorithm::PathUnit && !g.has_unit_lengths() {
                return fail("needs unit edge lengths".into());
            }
            if !g.has_unit_costs() {
                return fail("needs unit interdiction costs".into());
            }
            if !one_per_component {
                return fail(format!(
                    "needs p = B + 1, got p = {} and B = {}",
                    instance.p, instance.budget
                ));
            }
            Ok(())
        }
        Algorithm::TreeLeaf => {
            if !shape.is_tree() {
                return fail(format!("needs a tree, found a {shape}"));
            }
            if !g.has_unit_lengths() {
                return fail("needs unit edge lengths".into());
            }
            if !g.has_unit_costs() {
                return fail("needs unit interdiction costs".into());
            }
            if instance.budget != 1 || instance.p != 2 {
                return fail(format!(
                    "needs B = 1 and p = 2, got p = {} and B = {}",
                    instance.p, instance.budget
                ));
            }
            Ok(())
        }
        Algorithm::GreedyHeuristic => {
            if !shape.is_tree() {
                return fail(format!("needs a tree, found a {shape}"));
            }
            if !g.has_unit_costs() {
                return fail("needs unit interdiction costs".into());
            }
            if !one_per_component {
                return fail(format!(
                    "needs p = B + 1, got p = {} and B = {}",
                    instance.p, instance.budget
                ));
            }
            let leaves = g.leaves().len() as u64;
            if instance.budget > leaves {
                return fail(format!(
                    "needs {} leaves, the tree has {leaves}",
                    instance.budget
                ));
            }
            Ok(())
        }
    }
}

/// The exact algorithm `auto` runs: the most specialized one whose
/// preconditions hold, else the oracle.
pub fn choose_algorithm(instance: &Instance) -> Algorithm {
    [
        Algorithm::PathUnit,
        Algorithm::PathMatrix,
        Algorithm::TreeLeaf,
    ]
    .into_iter()
    .find(|&a| check_preconditions(instance, a).is_ok())
    .unwrap_or(Algorithm::Oracle)
}

/// Solves `instance` with the selected algorithm. A specific algorithm
/// whose preconditions fail is refused with [`Error::Precondition`]; only
/// [`Selector::Auto`] reroutes.
pub fn solve(instance: &Instance, selector: Selector) -> Result<SolveResult> {
    let algorithm = match selector {
        Selector::Auto => choose_algorithm(instance),
        Selector::Use(a) => {
            check_preconditions(instance, a)?;
            a
        }
    };
    let g = &instance.graph;
    match algorithm {
        Algorithm::Oracle => oracle(g, instance.p, instance.budget),
        Algorithm::TreeLeaf => solve_tree_unit_b1(g),
        Algorithm::GreedyHeuristic => greedy_closest_leaves(g, instance.budget),
        Algorithm::PathUnit | Algorithm::PathMatrix => {
            let order = g.classify().path_order().expect("checked above").to_vec();
            let canonical = if algorithm == Algorithm::PathUnit {
                solve_path_unit(order.len(), instance.budget)?
            } else {
                let lengths: Vec<u64> = order
                    .windows(2)
                    .map(|w| {
                        g.edge(g.find_edge(w[0], w[1]).expect("consecutive path vertices"))
                            .length
                    })
                    .collect();
                solve_path_arbitrary(&lengths, instance.budget)?
            };
            relabel_path_result(g, &order, canonical)
        }
    }
}

/// Maps a result on the canonical path `1 - ... - n` back onto `graph`,
/// whose vertices run along the path in `order`.
fn relabel_path_result(
    graph: &Graph,
    order: &[Vertex],
    canonical: SolveResult,
) -> Result<SolveResult> {
    let edges = canonical
        .strategy
        .edges()
        .iter()
        .map(|&t| {
            graph
                .find_edge(order[t - 1], order[t])
                .expect("consecutive path vertices")
        })
        .collect();
    let facilities = canonical
        .locator_response
        .vertices()
        .iter()
        .map(|&v| order[v - 1])
        .collect();
    Ok(SolveResult {
        strategy: InterdictionStrategy::new(graph, edges)?,
        locator_response: FacilitySet::new(facilities)?,
        ..canonical
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::median::{objective, MedianValue};
    use crate::testing::{fig5, fig7};

    fn inst(g: Graph, p: usize, b: u64) -> Instance {
        Instance::new(g, p, b).unwrap()
    }

    #[test]
    fn auto_routing() {
        assert_eq!(
            choose_algorithm(&inst(Graph::unit_path(7), 2, 1)),
            Algorithm::PathUnit
        );
        assert_eq!(
            choose_algorithm(&inst(Graph::path(&[3, 1, 4]), 3, 2)),
            Algorithm::PathMatrix
        );
        assert_eq!(choose_algorithm(&inst(fig5(), 2, 1)), Algorithm::TreeLeaf);
        assert_eq!(choose_algorithm(&inst(fig5(), 4, 3)), Algorithm::Oracle);
        assert_eq!(choose_algorithm(&inst(fig7(), 2, 1)), Algorithm::Oracle);
        assert_eq!(
            choose_algorithm(&inst(Graph::unit_path(7), 3, 1)),
            Algorithm::Oracle
        );
    }

    #[test]
    fn p7_auto_value() {
        let r = solve(&inst(Graph::unit_path(7), 2, 1), Selector::Auto).unwrap();
        assert_eq!(r.value, MedianValue::Finite(9));
    }

    #[test]
    fn specialized_algorithms_refuse() {
        let err = solve(&inst(fig7(), 2, 1), Selector::Use(Algorithm::TreeLeaf)).unwrap_err();
        assert!(
            matches!(err, Error::Precondition(ref m) if m.contains("unit edge lengths")),
            "{err}"
        );
        let err = solve(&inst(fig5(), 2, 1), Selector::Use(Algorithm::PathUnit)).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("path")));
        let err = solve(
            &inst(Graph::unit_path(7), 3, 1),
            Selector::Use(Algorithm::PathMatrix),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("p = B + 1")));
    }

    #[test]
    fn relabels_scrambled_paths() {
        // Path 3 - 1 - 4 - 2 with lengths 5, 1, 1 listed out of order.
        let g = Graph::new(
            4,
            vec![
                Edge::new(4, 2, 1, 1),
                Edge::new(1, 3, 5, 1),
                Edge::new(1, 4, 1, 1),
            ],
        )
        .unwrap();
        let i = inst(g.clone(), 2, 1);
        let r = solve(&i, Selector::Use(Algorithm::PathMatrix)).unwrap();
        let o = solve(&i, Selector::Use(Algorithm::Oracle)).unwrap();
        assert_eq!(r.value, o.value);
        assert_eq!(r.value, MedianValue::Finite(6));
        let rest = g.remove_edges(r.strategy.edges()).unwrap().graph;
        assert_eq!(objective(&rest, &r.locator_response).unwrap(), r.value);
    }
}
