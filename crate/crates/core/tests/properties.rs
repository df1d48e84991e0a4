use medint_core::interdiction::{
    feasible_strategies, interdiction_matrix, oracle, solve, solve_tree_unit_b1, strategy_value,
};
use medint_core::io::{generate, parse, serialize, GeneratorKind, GeneratorSpec};
use medint_core::median::{all_vertex_1median_values, solve_p_median, unit_path_1median};
use medint_core::reduction::{kbpr2_to_gadget, KnapsackInstance, KnapsackItem};
use medint_core::{Edge, Graph, Instance, InterdictionStrategy, MedianValue, Selector};
use proptest::prelude::*;

/// Random simple graph on up to 6 vertices with lengths 0..=5 and costs 1..=3.
fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        (
            Just(n),
            Just(pairs),
            proptest::collection::vec(any::<bool>(), k),
            proptest::collection::vec(0u64..=5, k),
            proptest::collection::vec(1u64..=3, k),
        )
            .prop_map(|(n, pairs, keep, lengths, costs)| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| keep[*i])
                    .map(|(i, &(u, v))| Edge::new(u, v, lengths[i], costs[i]))
                    .collect();
                Graph::new(n, edges).unwrap()
            })
    })
}

fn unit_tree(n: usize, seed: u64) -> Graph {
    let mut spec = GeneratorSpec::new(GeneratorKind::TreeUnitRandom, n, seed);
    spec.budget = Some(0);
    generate(&spec).unwrap().instance.graph
}

fn cut(g: &Graph, edges: Vec<usize>, p: usize, budget: u64) -> MedianValue {
    let s = InterdictionStrategy::new(g, edges).unwrap();
    strategy_value(g, &s, p, budget).unwrap().1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_inverts_serialize(g in small_graph(), p_seed in 0usize..6, budget in 0u64..10) {
        let p = 1 + p_seed % g.vertex_count();
        let inst = Instance::new(g, p, budget).unwrap();
        let text = serialize(&inst);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn budget_monotonicity(g in small_graph(), p_seed in 0usize..6) {
        let p = 1 + p_seed % g.vertex_count();
        let mut last = None;
        for b in 0..=4 {
            let v = oracle(&g, p, b).unwrap().value;
            if let Some(prev) = last {
                prop_assert!(v >= prev, "B = {b}: {v} < {prev}");
            }
            last = Some(v);
        }
    }

    #[test]
    fn auto_agrees_with_oracle(g in small_graph(), p_seed in 0usize..6, budget in 0u64..3) {
        let p = 1 + p_seed % g.vertex_count();
        let inst = Instance::new(g, p, budget).unwrap();
        let auto = solve(&inst, Selector::Auto).unwrap();
        let exact = oracle(&inst.graph, p, budget).unwrap();
        prop_assert_eq!(auto.value, exact.value);
    }

    #[test]
    fn oracle_response_is_consistent(g in small_graph(), p_seed in 0usize..6, budget in 0u64..4) {
        let p = 1 + p_seed % g.vertex_count();
        let r = oracle(&g, p, budget).unwrap();
        prop_assert!(r.strategy.total_cost() <= budget);
        prop_assert_eq!(strategy_value(&g, &r.strategy, p, budget).unwrap().1, r.value);
        for edges in feasible_strategies(&g, budget).unwrap() {
            prop_assert!(cut(&g, edges, p, budget) <= r.value);
        }
    }
}

#[test]
fn unit_path_cut_identity() {
    for n in 2..=100usize {
        let values = interdiction_matrix(n).apply(&vec![1; n - 1]);
        for t in 1..n {
            let expect = unit_path_1median(t).1 + unit_path_1median(n - t).1;
            assert_eq!(values[t - 1], expect, "n={n} t={t}");
            // 4 f = 2t² + n² - 2nt - a with a in {0, 1, 2}.
            let quad = 2 * t * t + n * n - 2 * n * t;
            let a = quad - 4 * expect as usize;
            assert!(a <= 2, "n={n} t={t}: a = {a}");
        }
    }
    for n in 2..=30usize {
        let g = Graph::unit_path(n);
        for t in 1..n {
            let expect = unit_path_1median(t).1 + unit_path_1median(n - t).1;
            assert_eq!(cut(&g, vec![t], 2, 1), MedianValue::Finite(expect));
        }
    }
}

#[test]
fn median_branches_hold_at_most_half() {
    for seed in 0..300 {
        let g = unit_tree(1 + (seed % 15) as usize, seed);
        let n = g.vertex_count();
        for &r in &all_vertex_1median_values(&g).unwrap().medians {
            let rooted = g.root_tree(r).unwrap();
            for &(w, _) in g.neighbors(r) {
                assert!(2 * rooted.subtree_size[w] <= n, "seed {seed}");
            }
        }
    }
}

/// Every leaf edge at the minimum distance to the median set gives the same
/// value, so the tie-break among them does not matter.
#[test]
fn nearest_leaf_choice_does_not_matter() {
    for seed in 0..400 {
        let g = unit_tree(2 + (seed % 13) as usize, seed);
        let medians = all_vertex_1median_values(&g).unwrap().medians;
        let dist = g.distances_from_set(&medians);
        let leaves = g.leaves();
        let best = leaves.iter().map(|&l| dist[l]).min().unwrap();
        let chosen = solve_tree_unit_b1(&g).unwrap().value;
        for &l in leaves.iter().filter(|&&l| dist[l] == best) {
            let edge = g.neighbors(l)[0].1;
            assert_eq!(cut(&g, vec![edge], 2, 1), chosen, "seed {seed} leaf {l}");
        }
    }
}

#[test]
fn tree_leaf_matches_oracle_on_larger_trees() {
    for seed in 0..60 {
        let g = unit_tree(13 + (seed % 8) as usize, seed);
        assert_eq!(
            solve_tree_unit_b1(&g).unwrap().value,
            oracle(&g, 2, 1).unwrap().value,
            "seed {seed}"
        );
    }
}

fn small_knapsacks() -> Vec<KnapsackInstance> {
    let mut out = Vec::new();
    let profiles: [&[(u64, u64)]; 6] = [
        &[(1, 1)],
        &[(1, 1), (1, 2)],
        &[(2, 2), (2, 2)],
        &[(3, 2), (1, 3), (2, 4)],
        &[(1, 3), (2, 3), (2, 5)],
        &[(4, 4), (1, 2), (3, 3)],
    ];
    for items in profiles {
        let total: u64 = items.iter().map(|i| i.0).sum();
        for capacity in 0..=total {
            let items: Vec<_> = items
                .iter()
                .map(|&(weight, profit)| KnapsackItem { weight, profit })
                .collect();
            out.push(KnapsackInstance::new(items, capacity, 1).unwrap());
        }
    }
    out
}

#[test]
fn gadget_item_edges_are_the_only_affordable_ones() {
    for k in small_knapsacks() {
        let gadget = kbpr2_to_gadget(&k);
        let g = &gadget.instance.graph;
        let affordable: Vec<_> = g
            .edge_ids()
            .filter(|(_, e)| e.cost <= k.capacity)
            .map(|(id, _)| id)
            .collect();
        let expect: Vec<_> = gadget
            .item_edges
            .iter()
            .copied()
            .filter(|&e| g.edge(e).cost <= k.capacity)
            .collect();
        assert_eq!(affordable, expect);
        assert!(g
            .edge_ids()
            .filter(|(id, _)| !gadget.item_edges.contains(id))
            .all(|(_, e)| e.cost == k.capacity + 1));
        assert_eq!(g.vertex_count(), 4 * k.items.len() + 3);
    }
}

/// For every feasible strategy the locator's answer puts one facility in
/// each four-vertex item path and one on the hub or the path above it.
#[test]
fn gadget_locator_response_shape() {
    for k in small_knapsacks() {
        let gadget = kbpr2_to_gadget(&k);
        let inst = &gadget.instance;
        let g = &inst.graph;
        for edges in feasible_strategies(g, inst.budget).unwrap() {
            let rest = g.remove_edges(&edges).unwrap().graph;
            let (x, value) = solve_p_median(&rest, inst.p).unwrap();
            assert!(!value.is_infeasible());
            let top = x.vertices().iter().filter(|&&v| v <= 3).count();
            assert_eq!(top, 1, "{k:?} cut {edges:?}: {x}");
            for i in 0..k.items.len() {
                let first = 4 + 4 * i;
                let inside = x
                    .vertices()
                    .iter()
                    .filter(|&&v| (first..first + 4).contains(&v))
                    .count();
                assert_eq!(inside, 1, "{k:?} cut {edges:?}: {x}");
            }
            // The value is the profit of the cut items.
            let profit: u64 = edges
                .iter()
                .map(|e| gadget.item_edges.iter().position(|x| x == e).unwrap())
                .map(|i| k.items[i].profit)
                .sum();
            assert_eq!(value, MedianValue::Finite(profit));
        }
    }
}
