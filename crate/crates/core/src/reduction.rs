//! Hardness gadgets: equal partition → knapsack with profit ratio at most 2
//! → tree interdiction, plus brute-force solvers for both source problems so
//! the chain can be checked end to end.
//!
//! Items and partition elements are numbered from 1.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph};
use crate::instance::Instance;

/// Largest source instance the brute-force solvers enumerate.
pub const MAX_BRUTE_ITEMS: usize = 20;

/// Split the weights into two halves of equal size and equal sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInstance {
    pub weights: Vec<u64>,
}

impl PartitionInstance {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Input("partition needs at least one weight".into()));
        }
        Ok(PartitionInstance { weights })
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnapsackItem {
    pub weight: u64,
    pub profit: u64,
}

/// Knapsack decision instance whose profits differ by at most a factor 2:
/// is there a selection of weight at most `capacity` and profit at least
/// `target`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackInstance {
    pub items: Vec<KnapsackItem>,
    pub capacity: u64,
    pub target: u64,
}

impl KnapsackInstance {
    /// Requires at least one item, positive weights and profits, and
    /// `max profit <= 2 * min profit`.
    pub fn new(items: Vec<KnapsackItem>, capacity: u64, target: u64) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::Input("knapsack needs at least one item".into()));
        }
        if let Some((i, _)) = items
            .iter()
            .find_position(|it| it.weight == 0 || it.profit == 0)
        {
            return Err(Error::Input(format!(
                "item {} needs positive weight and profit",
                i + 1
            )));
        }
        let lo = items.iter().map(|it| it.profit).min().unwrap();
        let hi = items.iter().map(|it| it.profit).max().unwrap();
        if hi > 2 * lo {
            return Err(Error::Input(format!("profit ratio {hi}/{lo} exceeds 2")));
        }
        Ok(KnapsackInstance {
            items,
            capacity,
            target,
        })
    }
}

/// The tree built from a knapsack instance, as an interdiction instance with
/// decision threshold `threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub instance: Instance,
    pub threshold: u64,
    /// `item_edges[i - 1]` is the only interdictable edge of item `i`.
    pub item_edges: Vec<EdgeId>,
    pub source: KnapsackInstance,
}

/// `p_i = w_i = w̃_i + B̃ + 1` and `W = P = B̃/2 + (n/2)(B̃ + 1)` where `B̃`
/// is the weight total. Needs an even total and an even number of weights.
pub fn partition_to_kbpr2(partition: &PartitionInstance) -> Result<KnapsackInstance> {
    let total = partition.total();
    if !total.is_multiple_of(2) {
        return Err(Error::Input(format!(
            "partition weights sum to {total}, which is odd"
        )));
    }
    let n = partition.weights.len() as u64;
    if !n.is_multiple_of(2) {
        return Err(Error::Input(format!(
            "equal partition needs an even number of weights, got {n}"
        )));
    }
    let items = partition
        .weights
        .iter()
        .map(|&w| KnapsackItem {
            weight: w + total + 1,
            profit: w + total + 1,
        })
        .collect();
    let bound = total / 2 + n / 2 * (total + 1);
    KnapsackInstance::new(items, bound, bound)
}

/// Builds the interdiction tree for a knapsack instance.
///
/// Vertex 1 is the hub. Vertices 2 and 3 form a two-vertex path above it,
/// joined by zero-length edges nobody can afford to cut. Each item `i`
/// hangs a four-vertex path below the hub whose edges, from the hub down,
/// carry `(length, cost)` = `(0, w_i)`, `(p_i, B+1)`, `(0, B+1)`, `(0, B+1)`
/// with `B` the capacity. The budget is `B`, the facility count is one per
/// item plus one, and the threshold is the profit target.
pub fn kbpr2_to_gadget(knapsack: &KnapsackInstance) -> GadgetInstance {
    let m = knapsack.items.len();
    let budget = knapsack.capacity;
    let blocked = budget + 1;
    let hub = 1;
    let mut edges = vec![Edge::new(hub, 2, 0, blocked), Edge::new(2, 3, 0, blocked)];
    let mut item_edges = Vec::with_capacity(m);
    for (i, item) in knapsack.items.iter().enumerate() {
        let first = 4 + 4 * i;
        item_edges.push(edges.len() + 1);
        edges.push(Edge::new(hub, first, 0, item.weight));
        edges.push(Edge::new(first, first + 1, item.profit, blocked));
        edges.push(Edge::new(first + 1, first + 2, 0, blocked));
        edges.push(Edge::new(first + 2, first + 3, 0, blocked));
    }
    let graph = Graph::new(4 * m + 3, edges).expect("gadget construction is valid");
    GadgetInstance {
        instance: Instance::new(graph, m + 1, budget).expect("p = m + 1 <= 4m + 3"),
        threshold: knapsack.target,
        item_edges,
        source: knapsack.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackSolution {
    /// Selected items, ascending, 1-based.
    pub items: Vec<usize>,
    pub weight: u64,
    pub profit: u64,
    /// `profit >= target`.
    pub yes: bool,
}

/// Maximum profit within capacity by enumerating all `2^m` selections.
/// Ties go to the lexicographically smallest item list.
pub fn solve_kbpr2_brute(knapsack: &KnapsackInstance) -> Result<KnapsackSolution> {
    let m = knapsack.items.len();
    if m > MAX_BRUTE_ITEMS {
        return Err(Error::Size(format!(
            "{m} items exceed the brute-force limit of {MAX_BRUTE_ITEMS}"
        )));
    }
    let mut best: Option<(Vec<usize>, u64, u64)> = None;
    for mask in 0u32..(1 << m) {
        let chosen: Vec<usize> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let weight: u64 = chosen.iter().map(|&i| knapsack.items[i - 1].weight).sum();
        if weight > knapsack.capacity {
            continue;
        }
        let profit: u64 = chosen.iter().map(|&i| knapsack.items[i - 1].profit).sum();
        let better = match &best {
            None => true,
            Some((items, _, p)) => profit > *p || (profit == *p && chosen < *items),
        };
        if better {
            best = Some((chosen, weight, profit));
        }
    }
    let (items, weight, profit) = best.expect("the empty selection always fits");
    Ok(KnapsackSolution {
        items,
        weight,
        profit,
        yes: profit >= knapsack.target,
    })
}

/// The lexicographically smallest half `I₁` (1-based indices, `n/2` of them)
/// summing to half the total, or `None` when no equal partition exists.
pub fn solve_partition_brute(partition: &PartitionInstance) -> Result<Option<Vec<usize>>> {
    let n = partition.weights.len();
    if n > MAX_BRUTE_ITEMS {
        return Err(Error::Size(format!(
            "{n} weights exceed the brute-force limit of {MAX_BRUTE_ITEMS}"
        )));
    }
    let total = partition.total();
    if !n.is_multiple_of(2) || !total.is_multiple_of(2) {
        return Ok(None);
    }
    Ok((1..=n)
        .combinations(n / 2)
        .find(|half| half.iter().map(|&i| partition.weights[i - 1]).sum::<u64>() == total / 2))
}
