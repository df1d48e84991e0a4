use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::interdiction::{strategy_value, Algorithm, InterdictionStrategy, SolveResult};
use crate::median::{all_vertex_1median_values, FacilitySet, MedianValue};

/// Unit tree, unit costs, one cut, two facilities.
///
/// Finds the leaf nearest to any optimal 1-median (smallest id on ties) and
/// cuts its edge. The locator then solves a 1-median in each of the two
/// parts, which the rerooting pass does in linear time.
pub fn solve_tree_unit_b1(tree: &Graph) -> Result<SolveResult> {
    let shape = tree.classify();
    if !shape.is_tree() {
        return Err(Error::Precondition(format!(
            "tree-leaf needs a tree, found a {shape}"
        )));
    }
    if !tree.has_unit_lengths() || !tree.has_unit_costs() {
        return Err(Error::Precondition(
            "tree-leaf needs unit edge lengths and unit interdiction costs".into(),
        ));
    }
    if tree.vertex_count() < 2 {
        return Err(Error::Precondition(
            "tree-leaf needs at least one edge".into(),
        ));
    }

    let leaf = nearest_leaves(tree)?[0];
    let (_, edge) = tree.neighbors(leaf)[0];
    let strategy = InterdictionStrategy::new(tree, vec![edge])?;

    let rest = tree.remove_edges(&[edge])?.graph;
    let mut facilities = Vec::with_capacity(2);
    let mut value = 0;
    for part in rest.components() {
        let medians = all_vertex_1median_values(&part.graph)?;
        facilities.push(part.parent_vertex(medians.medians[0]));
        value += medians.optimum;
    }
    Ok(SolveResult {
        strategy,
        locator_response: FacilitySet::new(facilities)?,
        value: MedianValue::Finite(value),
        algorithm: Algorithm::TreeLeaf,
    })
}

/// Leaves sorted by distance to the nearest optimal 1-median, then by id.
fn nearest_leaves(tree: &Graph) -> Result<Vec<Vertex>> {
    let medians = all_vertex_1median_values(tree)?.medians;
    let dist = tree.distances_from_set(&medians);
    let mut leaves = tree.leaves();
    leaves.sort_by_key(|&l| (dist[l], l));
    Ok(leaves)
}

/// Cuts the `B` leaves closest to a 1-median in one step, with `p = B + 1`.
///
/// This is the natural extension of the one-cut leaf rule and it is NOT
/// optimal for `B > 1`; it exists to measure the gap against the oracle.
pub fn greedy_closest_leaves(tree: &Graph, budget: u64) -> Result<SolveResult> {
    let shape = tree.classify();
    if !shape.is_tree() {
        return Err(Error::Precondition(format!(
            "greedy-heuristic needs a tree, found a {shape}"
        )));
    }
    if !tree.has_unit_costs() {
        return Err(Error::Precondition(
            "greedy-heuristic needs unit interdiction costs".into(),
        ));
    }
    let leaves = nearest_leaves(tree)?;
    let cuts = usize::try_from(budget).unwrap_or(usize::MAX);
    if cuts > leaves.len() || cuts >= tree.vertex_count() {
        return Err(Error::Precondition(format!(
            "greedy-heuristic needs {budget} leaves, the tree has {}",
            leaves.len()
        )));
    }
    // A two-vertex tree has two leaves sharing one edge.
    let mut edges: Vec<_> = leaves[..cuts]
        .iter()
        .map(|&l| tree.neighbors(l)[0].1)
        .collect();
    edges.dedup();
    if edges.len() < cuts {
        return Err(Error::Precondition(format!(
            "greedy-heuristic cannot cut {budget} distinct leaf edges"
        )));
    }
    let strategy = InterdictionStrategy::new(tree, edges)?;
    let (locator_response, value) = strategy_value(tree, &strategy, cuts + 1, budget)?;
    Ok(SolveResult {
        strategy,
        locator_response,
        value,
        algorithm: Algorithm::GreedyHeuristic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interdiction::{oracle, solve_path_unit};
    use crate::testing::{fig5, fig7, star};

    #[test]
    fn unit_path_cuts_first_edge() {
        let r = solve_tree_unit_b1(&Graph::unit_path(7)).unwrap();
        assert_eq!(r.strategy.edges(), &[1]);
        assert_eq!(r.value, MedianValue::Finite(9));
        assert_eq!(r.value, solve_path_unit(7, 1).unwrap().value);
    }

    #[test]
    fn star_cuts_a_leaf() {
        let r = solve_tree_unit_b1(&star(4)).unwrap();
        assert_eq!(r.strategy.edges(), &[1]);
        assert_eq!(r.value, MedianValue::Finite(3));
        assert_eq!(r.locator_response.vertices(), &[1, 2]);
    }

    #[test]
    fn fig5_single_cut_matches_oracle() {
        let r = solve_tree_unit_b1(&fig5()).unwrap();
        assert_eq!(r.value, oracle(&fig5(), 2, 1).unwrap().value);
    }

    #[test]
    fn refuses_weighted_trees() {
        assert!(matches!(
            solve_tree_unit_b1(&fig7()),
            Err(Error::Precondition(_))
        ));
        let tri = Graph::from_unit_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(matches!(
            solve_tree_unit_b1(&tri),
            Err(Error::Precondition(_))
        ));
        assert!(solve_tree_unit_b1(&Graph::unit_path(1)).is_err());
    }

    /// A hub whose nearest leaf ends a three-vertex pendant path: cutting the
    /// pendant at the hub is worse than cutting off its leaf.
    #[test]
    fn pendant_path_prefers_leaf_edge() {
        let g = Graph::from_unit_edges(
            12,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (1, 9),
                (9, 10),
                (10, 11),
                (11, 12),
            ],
        )
        .unwrap();
        let r = solve_tree_unit_b1(&g).unwrap();
        assert_eq!(r.strategy.edges(), &[3]);
        assert_eq!(r.value, MedianValue::Finite(23));
        assert_eq!(r.value, oracle(&g, 2, 1).unwrap().value);
        let hub_cut = InterdictionStrategy::new(&g, vec![1]).unwrap();
        assert_eq!(
            strategy_value(&g, &hub_cut, 2, 1).unwrap().1,
            MedianValue::Finite(22)
        );
    }

    #[test]
    fn greedy_is_suboptimal_on_fig5() {
        let r = greedy_closest_leaves(&fig5(), 3).unwrap();
        assert_eq!(r.strategy.edges(), &[3, 8, 10]);
        assert_eq!(r.value, MedianValue::Finite(15));
        assert_eq!(
            oracle(&fig5(), 4, 3).unwrap().value,
            MedianValue::Finite(16)
        );
    }

    #[test]
    fn greedy_needs_enough_leaves() {
        assert!(matches!(
            greedy_closest_leaves(&Graph::unit_path(5), 3),
            Err(Error::Precondition(_))
        ));
        assert!(greedy_closest_leaves(&Graph::unit_path(2), 2).is_err());
        let r = greedy_closest_leaves(&Graph::unit_path(5), 2).unwrap();
        assert_eq!(r.strategy.edges(), &[1, 4]);
    }
}
