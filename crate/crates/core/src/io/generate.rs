//! Seeded instance generators. The same spec always yields the same bytes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::instance::Instance;
use crate::io::format::serialize_with_comments;
use crate::reduction::{
    kbpr2_to_gadget, partition_to_kbpr2, KnapsackInstance, KnapsackItem, PartitionInstance,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    PathUnit,
    PathRandomLengths,
    TreeUnitRandom,
    GadgetFromKnapsack,
    GadgetFromPartition,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [
        GeneratorKind::PathUnit,
        GeneratorKind::PathRandomLengths,
        GeneratorKind::TreeUnitRandom,
        GeneratorKind::GadgetFromKnapsack,
        GeneratorKind::GadgetFromPartition,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            GeneratorKind::PathUnit => "path-unit",
            GeneratorKind::PathRandomLengths => "path-random-lengths",
            GeneratorKind::TreeUnitRandom => "tree-unit-random",
            GeneratorKind::GadgetFromKnapsack => "gadget-from-knapsack",
            GeneratorKind::GadgetFromPartition => "gadget-from-partition",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Input(format!("unknown generator kind `{s}`")))
    }
}

/// Everything a generator may read. Fields a kind does not use are ignored.
///
/// * Paths and trees use `n`, `budget` (default 1) and `p` (default
///   `budget + 1`). Random lengths are uniform in `lengths`, which may only
///   include 0 when `allow_zero_lengths` is set.
/// * `gadget-from-knapsack` uses `knapsack` when given, else draws `n`
///   items with profits in `5..=10` and weights in `1..=10`, capacity half
///   the total weight and target half the total profit.
/// * `gadget-from-partition` uses `weights` when given, else draws `n`
///   weights in `0..=max_weight` and bumps the first one if the total is
///   odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub p: Option<usize>,
    pub budget: Option<u64>,
    pub seed: u64,
    pub lengths: (u64, u64),
    pub allow_zero_lengths: bool,
    pub knapsack: Option<KnapsackInstance>,
    pub weights: Option<Vec<u64>>,
    pub max_weight: u64,
}

pub const DEFAULT_LENGTHS: (u64, u64) = (1, 10);
pub const DEFAULT_MAX_WEIGHT: u64 = 6;

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            kind,
            n,
            p: None,
            budget: None,
            seed,
            lengths: DEFAULT_LENGTHS,
            allow_zero_lengths: false,
            knapsack: None,
            weights: None,
            max_weight: DEFAULT_MAX_WEIGHT,
        }
    }
}

/// A generated instance and the comment lines describing where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub instance: Instance,
    pub comments: Vec<String>,
}

impl Generated {
    pub fn to_text(&self) -> String {
        serialize_with_comments(&self.instance, &self.comments)
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        GeneratorKind::PathUnit => {
            let n = check_n(spec.n, 1)?;
            Ok(Generated {
                instance: with_defaults(spec, Graph::unit_path(n))?,
                comments: Vec::new(),
            })
        }
        GeneratorKind::PathRandomLengths => {
            let n = check_n(spec.n, 1)?;
            let (lo, hi) = spec.lengths;
            if lo > hi {
                return Err(Error::Input(format!("empty length range [{lo}, {hi}]")));
            }
            if lo == 0 && !spec.allow_zero_lengths {
                return Err(Error::Input(
                    "zero lengths need the explicit allow-zero flag".into(),
                ));
            }
            let lengths: Vec<u64> = (1..n).map(|_| rng.random_range(lo..=hi)).collect();
            Ok(Generated {
                instance: with_defaults(spec, Graph::path(&lengths))?,
                comments: vec![format!(
                    "path-random-lengths n={n} seed={} lengths in [{lo},{hi}]",
                    spec.seed
                )],
            })
        }
        GeneratorKind::TreeUnitRandom => {
            let n = check_n(spec.n, 1)?;
            let tree = random_unit_tree(n, &mut rng);
            debug_assert!(tree.classify().is_tree());
            Ok(Generated {
                instance: with_defaults(spec, tree)?,
                comments: vec![format!("tree-unit-random n={n} seed={}", spec.seed)],
            })
        }
        GeneratorKind::GadgetFromKnapsack => {
            let knapsack = match &spec.knapsack {
                Some(k) => k.clone(),
                None => random_knapsack(check_n(spec.n, 1)?, &mut rng)?,
            };
            Ok(gadget_with_header(&knapsack, None))
        }
        GeneratorKind::GadgetFromPartition => {
            let weights = match &spec.weights {
                Some(w) => w.clone(),
                None => random_partition_weights(check_n(spec.n, 2)?, spec.max_weight, &mut rng),
            };
            let partition = PartitionInstance::new(weights)?;
            let knapsack = partition_to_kbpr2(&partition)?;
            Ok(gadget_with_header(&knapsack, Some(&partition)))
        }
    }
}

pub fn generate_text(spec: &GeneratorSpec) -> Result<String> {
    generate(spec).map(|g| g.to_text())
}

fn check_n(n: usize, min: usize) -> Result<usize> {
    if n < min {
        return Err(Error::Input(format!("size n = {n} must be at least {min}")));
    }
    Ok(n)
}

fn with_defaults(spec: &GeneratorSpec, graph: Graph) -> Result<Instance> {
    let budget = spec.budget.unwrap_or(1);
    let p = match spec.p {
        Some(p) => p,
        None => usize::try_from(budget + 1)
            .map_err(|_| Error::Input(format!("budget {budget} too large")))?,
    };
    Instance::new(graph, p, budget)
}

/// Uniform random labelled tree: decode a uniform Prüfer sequence, always
/// attaching the smallest remaining leaf. Edges come out as `(min, max)`
/// pairs sorted ascending.
pub fn random_unit_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let seq: Vec<Vertex> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(1..=n))
        .collect();
    let pairs = prufer_decode(n, &seq);
    Graph::from_unit_edges(n, &pairs).expect("Prüfer decoding yields a tree")
}

/// Edges of the tree on `1..=n` with Prüfer sequence `seq` (`n - 2` entries).
pub fn prufer_decode(n: usize, seq: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut pairs = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a leaf always remains");
        pairs.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let (a, b) = leaves
        .into_iter()
        .collect_tuple()
        .expect("two leaves remain");
    pairs.push((a, b));
    pairs.sort_unstable();
    pairs
}

fn random_knapsack(m: usize, rng: &mut impl Rng) -> Result<KnapsackInstance> {
    let items: Vec<KnapsackItem> = (0..m)
        .map(|_| KnapsackItem {
            weight: rng.random_range(1..=10),
            profit: rng.random_range(5..=10),
        })
        .collect();
    let capacity = items.iter().map(|i| i.weight).sum::<u64>() / 2;
    let target = items.iter().map(|i| i.profit).sum::<u64>() / 2;
    KnapsackInstance::new(items, capacity, target)
}

/// `n` weights uniform in `0..=max_weight` with an even total, from `seed`.
pub fn random_partition(n: usize, max_weight: u64, seed: u64) -> Result<PartitionInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PartitionInstance::new(random_partition_weights(
        check_n(n, 1)?,
        max_weight,
        &mut rng,
    ))
}

fn random_partition_weights(n: usize, max_weight: u64, rng: &mut impl Rng) -> Vec<u64> {
    let mut weights: Vec<u64> = (0..n).map(|_| rng.random_range(0..=max_weight)).collect();
    if weights.iter().sum::<u64>() % 2 == 1 {
        if weights[0] == max_weight {
            weights[0] -= 1;
        } else {
            weights[0] += 1;
        }
    }
    weights
}

fn gadget_with_header(
    knapsack: &KnapsackInstance,
    partition: Option<&PartitionInstance>,
) -> Generated {
    let gadget = kbpr2_to_gadget(knapsack);
    let mut comments = Vec::new();
    if let Some(part) = partition {
        comments.push(format!(
            "partition weights {}",
            part.weights.iter().join(" ")
        ));
    }
    comments.push(format!(
        "knapsack items (w,p) {}",
        knapsack
            .items
            .iter()
            .map(|i| format!("({},{})", i.weight, i.profit))
            .join(" ")
    ));
    comments.push(format!(
        "knapsack capacity W={} target P={}",
        knapsack.capacity, knapsack.target
    ));
    comments.push(format!("threshold K={}", gadget.threshold));
    comments.push(format!("item edges {}", gadget.item_edges.iter().join(" ")));
    Generated {
        instance: gadget.instance,
        comments,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::format::parse;

    #[test]
    fn path_unit_matches_p7_text() {
        let mut spec = GeneratorSpec::new(GeneratorKind::PathUnit, 7, 0);
        spec.budget = Some(1);
        spec.p = Some(2);
        let text = generate_text(&spec).unwrap();
        assert_eq!(
            text,
            "7 6\n2 1\n1 2 1 1\n2 3 1 1\n3 4 1 1\n4 5 1 1\n5 6 1 1\n6 7 1 1\n"
        );
        assert_eq!(
            generate_text(&GeneratorSpec::new(GeneratorKind::PathUnit, 7, 99)).unwrap(),
            text
        );
    }

    #[test]
    fn deterministic_under_seed() {
        for kind in GeneratorKind::ALL {
            let spec = GeneratorSpec::new(kind, 6, 1);
            let a = generate_text(&spec).unwrap();
            assert_eq!(a, generate_text(&spec).unwrap(), "{kind}");
            assert_eq!(parse(&a).unwrap(), generate(&spec).unwrap().instance);
        }
        let a = generate_text(&GeneratorSpec::new(GeneratorKind::TreeUnitRandom, 5, 1)).unwrap();
        let b = generate_text(&GeneratorSpec::new(GeneratorKind::TreeUnitRandom, 5, 1)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..200 {
            for n in 1..=12 {
                let mut spec = GeneratorSpec::new(GeneratorKind::TreeUnitRandom, n, seed);
                spec.budget = Some(0);
                let g = generate(&spec).unwrap();
                assert!(g.instance.graph.classify().is_tree());
                assert!(g.instance.graph.has_unit_lengths());
            }
        }
    }

    #[test]
    fn prufer_examples() {
        assert_eq!(prufer_decode(2, &[]), vec![(1, 2)]);
        assert_eq!(prufer_decode(1, &[]), vec![]);
        // Star around 1.
        assert_eq!(prufer_decode(4, &[1, 1]), vec![(1, 2), (1, 3), (1, 4)]);
        // Path 3 - 2 - 1 - 4.
        assert_eq!(prufer_decode(4, &[2, 1]), vec![(1, 2), (1, 4), (2, 3)]);
    }

    #[test]
    fn random_lengths_respect_range() {
        let mut spec = GeneratorSpec::new(GeneratorKind::PathRandomLengths, 40, 3);
        let g = generate(&spec).unwrap().instance.graph;
        assert!(g.edges().iter().all(|e| (1..=10).contains(&e.length)));
        spec.lengths = (0, 2);
        assert!(generate(&spec).is_err());
        spec.allow_zero_lengths = true;
        let g = generate(&spec).unwrap().instance.graph;
        assert!(g.edges().iter().all(|e| e.length <= 2));
        assert!(generate(&GeneratorSpec::new(GeneratorKind::PathUnit, 0, 0)).is_err());
    }

    #[test]
    fn gadget_from_partition_composes_reductions() {
        let mut spec = GeneratorSpec::new(GeneratorKind::GadgetFromPartition, 0, 0);
        spec.weights = Some(vec![1, 1, 1, 1]);
        let g = generate(&spec).unwrap();
        let k = partition_to_kbpr2(&PartitionInstance::new(vec![1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(g.instance, kbpr2_to_gadget(&k).instance);
        assert_eq!(g.instance.graph.vertex_count(), 19);
        assert!(g.comments.iter().any(|c| c == "threshold K=12"));

        spec.weights = Some(vec![1, 2]);
        assert!(generate(&spec).is_err());
    }

    #[test]
    fn random_partition_totals_are_even() {
        for seed in 0..100 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let w = random_partition_weights(6, 6, &mut rng);
            assert_eq!(w.iter().sum::<u64>() % 2, 0);
            assert!(w.iter().all(|&x| x <= 6));
        }
    }

    #[test]
    fn generated_tree_edges_are_sorted() {
        let g = generate(&GeneratorSpec::new(GeneratorKind::TreeUnitRandom, 9, 4)).unwrap();
        let p: Vec<_> = g
            .instance
            .graph
            .edges()
            .iter()
            .map(|e| (e.u, e.v))
            .collect();
        assert!(p.windows(2).all(|w| w[0] < w[1]));
        assert!(p.iter().all(|&(u, v)| u < v));
    }
}
