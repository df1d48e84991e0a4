//! Exact p-median on forests by dynamic programming over server assignments.
//!
//! Every vertex `v` of a rooted component is assigned a server `u`, a vertex
//! that holds a facility. Optimal assignments can be chosen path-consistent:
//! if `v` is served by `u`, so is every vertex on the path from `v` to `u`.
//! The table `cost[v][u][k]` is the cheapest way to serve the subtree of `v`
//! with exactly `k` facilities inside it, given that `v` is served by `u`.
//! A child `c` of `v` is then either served by `u` as well (forced when `u`
//! lies below `c`) or by some server inside its own subtree.
//!
//! Components are combined by a knapsack over facility counts, each
//! component taking at least one facility.

use crate::error::Result;
use crate::graph::{Component, Graph};
use crate::instance::check_p;
use crate::median::{is_forest, FacilitySet, MedianValue};

type Table = Vec<Option<u64>>;

/// Optimal p-median value on an acyclic graph.
pub fn p_median_forest_value(graph: &Graph, p: usize) -> Result<MedianValue> {
    check_p(graph, p)?;
    let solver = ForestSolver::new(graph, p);
    let tables = solver.base_tables();
    Ok(combine(&tables, p).into())
}

/// Exact p-median on an acyclic graph with lexicographic tie-breaking.
///
/// The optimal value comes from one DP pass. The lexicographically smallest
/// optimal set is then built greedily: a vertex joins the set if forcing it
/// (on top of the vertices already chosen) keeps the optimum.
pub fn solve_p_median_forest(graph: &Graph, p: usize) -> Result<(FacilitySet, MedianValue)> {
    check_p(graph, p)?;
    debug_assert!(is_forest(graph));
    let solver = ForestSolver::new(graph, p);
    let mut tables = solver.base_tables();
    let Some(target) = combine(&tables, p) else {
        return Ok((FacilitySet::first(p), MedianValue::Infeasible));
    };

    let mut forced: Vec<Vec<bool>> = solver.trees.iter().map(|t| vec![false; t.size()]).collect();
    let mut chosen = Vec::with_capacity(p);
    for v in graph.vertices() {
        if chosen.len() == p {
            break;
        }
        let (c, local) = solver.locate[v - 1];
        forced[c][local] = true;
        let trial = solver.trees[c].table(&forced[c], p);
        let saved = std::mem::replace(&mut tables[c], trial);
        if combine(&tables, p) == Some(target) {
            chosen.push(v);
        } else {
            forced[c][local] = false;
            tables[c] = saved;
        }
    }
    debug_assert_eq!(chosen.len(), p);
    Ok((FacilitySet(chosen), MedianValue::Finite(target)))
}

struct ForestSolver {
    trees: Vec<TreeDp>,
    /// Parent vertex `v` sits in tree `locate[v-1].0` at local index `.1`.
    locate: Vec<(usize, usize)>,
    p: usize,
}

impl ForestSolver {
    fn new(graph: &Graph, p: usize) -> Self {
        let components = graph.components();
        let mut locate = vec![(0, 0); graph.vertex_count()];
        for (c, comp) in components.iter().enumerate() {
            for (local, &v) in comp.vertices.iter().enumerate() {
                locate[v - 1] = (c, local);
            }
        }
        let trees = components.iter().map(TreeDp::new).collect();
        ForestSolver { trees, locate, p }
    }

    fn base_tables(&self) -> Vec<Table> {
        self.trees
            .iter()
            .map(|t| t.table(&vec![false; t.size()], self.p))
            .collect()
    }
}

/// Cheapest total over components with exactly `p` facilities, each
/// component receiving at least one.
fn combine(tables: &[Table], p: usize) -> Option<u64> {
    let mut acc: Table = vec![None; p + 1];
    acc[0] = Some(0);
    for table in tables {
        let mut next: Table = vec![None; p + 1];
        for (used, base) in acc.iter().enumerate() {
            let Some(base) = base else { continue };
            for (k, cost) in table.iter().enumerate().skip(1) {
                if used + k > p {
                    break;
                }
                if let Some(cost) = cost {
                    relax(&mut next[used + k], base + cost);
                }
            }
        }
        acc = next;
    }
    acc[p]
}

fn relax(slot: &mut Option<u64>, value: u64) {
    if slot.is_none_or(|old| value < old) {
        *slot = Some(value);
    }
}

/// One connected tree, 0-based local ids, rooted at local 0.
struct TreeDp {
    dist: Vec<Vec<u64>>,
    children: Vec<Vec<usize>>,
    /// Root first; parents precede children.
    order: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl TreeDp {
    fn new(comp: &Component) -> Self {
        let g = &comp.graph;
        let s = g.vertex_count();
        let rooted = g.root_tree(1).expect("forest components are trees");
        let order: Vec<usize> = rooted.order.iter().map(|&v| v - 1).collect();
        let mut children = vec![Vec::new(); s];
        for &v in rooted.order.iter().skip(1) {
            children[rooted.parent[v] - 1].push(v - 1);
        }
        let dist = g
            .vertices()
            .map(|v| {
                g.distances_from(v)
                    .into_vec()
                    .into_iter()
                    .map(|d| d.expect("component is connected"))
                    .collect()
            })
            .collect();

        let mut tin = vec![0; s];
        let mut tout = vec![0; s];
        let mut clock = 0;
        let mut stack = vec![(0usize, false)];
        while let Some((v, done)) = stack.pop() {
            if done {
                tout[v] = clock;
                continue;
            }
            tin[v] = clock;
            clock += 1;
            stack.push((v, true));
            for &c in children[v].iter().rev() {
                stack.push((c, false));
            }
        }
        TreeDp {
            dist,
            children,
            order,
            tin,
            tout,
        }
    }

    fn size(&self) -> usize {
        self.dist.len()
    }

    /// True when `u` lies in the subtree of `v`.
    fn below(&self, v: usize, u: usize) -> bool {
        self.tin[v] <= self.tin[u] && self.tin[u] < self.tout[v]
    }

    /// Minimum cost for each facility count `0..=min(p, size)`; the vertices
    /// flagged in `forced` must be facilities.
    fn table(&self, forced: &[bool], p: usize) -> Table {
        let s = self.size();
        let kmax = p.min(s);
        let mut cost: Vec<Vec<Table>> = vec![Vec::new(); s];
        let mut inside: Vec<Table> = vec![Vec::new(); s];

        for &v in self.order.iter().rev() {
            let mut rows = Vec::with_capacity(s);
            #[allow(clippy::needless_range_loop)]
            for u in 0..s {
                let mut cur: Table = if u == v {
                    vec![None, Some(0)]
                } else if forced[v] {
                    rows.push(Vec::new());
                    continue;
                } else {
                    vec![Some(self.dist[v][u])]
                };
                for &c in &self.children[v] {
                    let via_u = &cost[c][u];
                    let option: Table = if self.below(c, u) {
                        via_u.clone()
                    } else {
                        (0..via_u.len().max(inside[c].len()))
                            .map(|k| {
                                let a = via_u.get(k).copied().flatten();
                                let b = inside[c].get(k).copied().flatten();
                                match (a, b) {
                                    (Some(a), Some(b)) => Some(a.min(b)),
                                    (a, b) => a.or(b),
                                }
                            })
                            .collect()
                    };
                    cur = merge(&cur, &option, kmax);
                    if cur.iter().all(Option::is_none) {
                        break;
                    }
                }
                rows.push(cur);
            }
            let mut best: Table = Vec::new();
            for u in (0..s).filter(|&u| self.below(v, u)) {
                for (k, c) in rows[u].iter().enumerate() {
                    if let Some(c) = c {
                        if best.len() <= k {
                            best.resize(k + 1, None);
                        }
                        relax(&mut best[k], *c);
                    }
                }
            }
            inside[v] = best;
            cost[v] = rows;
            for &c in &self.children[v] {
                cost[c] = Vec::new();
                inside[c] = Vec::new();
            }
        }
        let mut root = std::mem::take(&mut inside[0]);
        root.resize(kmax + 1, None);
        root
    }
}

/// Min-plus convolution truncated at `kmax` facilities.
fn merge(a: &Table, b: &Table, kmax: usize) -> Table {
    let len = (a.len() + b.len()).saturating_sub(1).min(kmax + 1);
    let mut out: Table = vec![None; len];
    for (i, x) in a.iter().enumerate() {
        let Some(x) = x else { continue };
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if let Some(y) = y {
                relax(&mut out[i + j], x + y);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::median::solve_p_median_enum;
    use proptest::prelude::*;

    fn fig7() -> Graph {
        Graph::new(
            7,
            vec![
                Edge::new(1, 3, 10, 1),
                Edge::new(2, 3, 10, 1),
                Edge::new(3, 4, 1, 1),
                Edge::new(4, 5, 1, 1),
                Edge::new(5, 6, 10, 1),
                Edge::new(5, 7, 10, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn matches_enumeration_on_fig7() {
        for p in 1..=7 {
            assert_eq!(
                solve_p_median_forest(&fig7(), p).unwrap(),
                solve_p_median_enum(&fig7(), p).unwrap(),
                "p = {p}"
            );
        }
    }

    #[test]
    fn infeasible_when_p_below_component_count() {
        let g = Graph::unit_path(5).remove_edges(&[1, 2, 4]).unwrap().graph;
        assert_eq!(
            p_median_forest_value(&g, 3).unwrap(),
            MedianValue::Infeasible
        );
        let (x, v) = solve_p_median_forest(&g, 4).unwrap();
        assert_eq!(v, MedianValue::Finite(1));
        assert_eq!(x.vertices(), &[1, 2, 3, 5]);
    }

    fn forest_strategy() -> impl Strategy<Value = Graph> {
        (1usize..=9)
            .prop_flat_map(|n| {
                let parents = proptest::collection::vec(
                    (any::<prop::sample::Index>(), 0u64..=4, any::<bool>()),
                    n - 1,
                );
                (Just(n), parents)
            })
            .prop_map(|(n, spec)| {
                let edges = spec
                    .iter()
                    .enumerate()
                    .filter(|(_, (_, _, keep))| *keep)
                    .map(|(i, (parent, len, _))| {
                        let child = i + 2;
                        Edge::new(parent.index(child - 1) + 1, child, *len, 1)
                    })
                    .collect();
                Graph::new(n, edges).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn dp_agrees_with_enumeration(g in forest_strategy(), p_seed in any::<prop::sample::Index>()) {
            let p = p_seed.index(g.vertex_count()) + 1;
            let dp = solve_p_median_forest(&g, p).unwrap();
            let brute = solve_p_median_enum(&g, p).unwrap();
            prop_assert_eq!(&dp, &brute);
            prop_assert_eq!(p_median_forest_value(&g, p).unwrap(), brute.1);
        }
    }
}
