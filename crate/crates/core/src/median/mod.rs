//! Locator side: the p-median objective and exact solvers for it.

mod forest;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexMap};
use crate::instance::check_p;

pub use forest::{p_median_forest_value, solve_p_median_forest};

/// Objective value of a facility set. `Infeasible` marks a set that leaves
/// some vertex without a reachable facility; it orders above every finite
/// value, so the interdictor's maximization treats it as +∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MedianValue {
    Finite(u64),
    Infeasible,
}

impl MedianValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            MedianValue::Finite(v) => Some(v),
            MedianValue::Infeasible => None,
        }
    }

    pub fn is_infeasible(self) -> bool {
        self == MedianValue::Infeasible
    }

    /// Sum with `Infeasible` absorbing.
    pub fn plus(self, other: MedianValue) -> MedianValue {
        match (self, other) {
            (MedianValue::Finite(a), MedianValue::Finite(b)) => MedianValue::Finite(a + b),
            _ => MedianValue::Infeasible,
        }
    }
}

impl From<Option<u64>> for MedianValue {
    fn from(v: Option<u64>) -> Self {
        v.map_or(MedianValue::Infeasible, MedianValue::Finite)
    }
}

impl fmt::Display for MedianValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MedianValue::Finite(v) => write!(f, "{v}"),
            MedianValue::Infeasible => f.write_str("INFEASIBLE"),
        }
    }
}

/// Facility locations, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacilitySet(Vec<Vertex>);

impl FacilitySet {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Input("facility set is empty".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("facility set repeats a vertex".into()));
        }
        Ok(FacilitySet(vertices))
    }

    /// `{1, ..., p}`.
    pub fn first(p: usize) -> Self {
        FacilitySet((1..=p).collect())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn p(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for FacilitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(", "))
    }
}

/// `f(X)`: the summed distance of every vertex to its nearest facility.
pub fn objective(graph: &Graph, facilities: &FacilitySet) -> Result<MedianValue> {
    if let Some(&bad) = facilities
        .vertices()
        .iter()
        .find(|&&v| !graph.contains_vertex(v))
    {
        return Err(Error::Input(format!("facility {bad} is not a vertex")));
    }
    let dist = graph.distances_from_set(facilities.vertices());
    Ok(dist
        .values()
        .iter()
        .try_fold(0u64, |acc, d| d.map(|d| acc + d))
        .into())
}

/// Exact p-median by enumerating all `C(n, p)` vertex subsets.
///
/// Among optimal sets the lexicographically smallest is returned. When every
/// subset is infeasible the result is `({1..p}, Infeasible)`.
pub fn solve_p_median_enum(graph: &Graph, p: usize) -> Result<(FacilitySet, MedianValue)> {
    check_p(graph, p)?;
    let dist = graph.distance_matrix();
    let n = graph.vertex_count();
    let mut best: Option<(Vec<Vertex>, u64)> = None;

    'subsets: for subset in (0..n).combinations(p) {
        let bound = best.as_ref().map_or(u64::MAX, |(_, b)| *b);
        let mut total = 0u64;
        #[allow(clippy::needless_range_loop)]
        for v in 0..n {
            let nearest = subset.iter().filter_map(|&x| dist[x][v]).min();
            match nearest {
                Some(d) => total += d,
                None => continue 'subsets,
            }
            if total >= bound {
                continue 'subsets;
            }
        }
        best = Some((subset, total));
    }

    Ok(match best {
        Some((subset, value)) => (
            FacilitySet(subset.into_iter().map(|x| x + 1).collect()),
            MedianValue::Finite(value),
        ),
        None => (FacilitySet::first(p), MedianValue::Infeasible),
    })
}

/// True when the graph has no cycle.
pub(crate) fn is_forest(graph: &Graph) -> bool {
    graph.edge_count() + graph.component_labels().1 == graph.vertex_count()
}

/// Exact p-median: the forest DP on acyclic graphs, enumeration otherwise.
/// Tie-breaking is lexicographic in both routes.
pub fn solve_p_median(graph: &Graph, p: usize) -> Result<(FacilitySet, MedianValue)> {
    if is_forest(graph) {
        solve_p_median_forest(graph, p)
    } else {
        solve_p_median_enum(graph, p)
    }
}

/// Optimal p-median value only.
pub fn p_median_value(graph: &Graph, p: usize) -> Result<MedianValue> {
    if is_forest(graph) {
        p_median_forest_value(graph, p)
    } else {
        solve_p_median_enum(graph, p).map(|(_, v)| v)
    }
}

/// Goldman's leaf-peeling 1-median for trees with unit vertex weights.
///
/// Leaves are taken in ascending id order. A leaf whose accumulated weight
/// reaches half the total is returned; otherwise it is deleted and its weight
/// passed to its neighbour.
pub fn goldman_1_median(tree: &Graph) -> Result<Vertex> {
    let shape = tree.classify();
    if !shape.is_tree() {
        return Err(Error::Shape(format!(
            "1-median needs a tree, found a {shape}"
        )));
    }
    let n = tree.vertex_count();
    if n == 1 {
        return Ok(1);
    }
    let mut weight = VertexMap::filled(n, 1usize);
    let mut degree = VertexMap::from_vec(tree.vertices().map(|v| tree.degree(v)).collect());
    let mut deleted = VertexMap::filled(n, false);
    let mut leaves: BTreeSet<Vertex> = tree.leaves().into_iter().collect();

    while let Some(leaf) = leaves.pop_first() {
        if 2 * weight[leaf] >= n {
            return Ok(leaf);
        }
        deleted[leaf] = true;
        let &(next, _) = tree
            .neighbors(leaf)
            .iter()
            .find(|&&(w, _)| !deleted[w])
            .expect("a leaf below half the weight has a live neighbour");
        weight[next] += weight[leaf];
        degree[next] -= 1;
        if degree[next] <= 1 {
            leaves.insert(next);
        }
    }
    unreachable!("the last remaining vertex carries the full weight")
}

/// `f({v})` for every vertex of a tree, with the set of minimizers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneMedianValues {
    pub values: VertexMap<u64>,
    /// Every optimal 1-median, ascending.
    pub medians: Vec<Vertex>,
    pub optimum: u64,
}

/// All single-vertex objective values of a tree by rerooting.
///
/// Moving the facility across edge `(parent, v)` changes the objective by
/// `length * (n - 2 |T_v|)`.
pub fn all_vertex_1median_values(tree: &Graph) -> Result<OneMedianValues> {
    let rooted = tree.root_tree(1)?;
    let n = tree.vertex_count() as i128;
    let mut values = VertexMap::filled(tree.vertex_count(), 0u64);
    values[1] = rooted.depth.values().iter().sum();
    for &v in rooted.order.iter().skip(1) {
        let parent = rooted.parent[v];
        let length = tree
            .edge(rooted.parent_edge[v].expect("non-root has a parent edge"))
            .length;
        let delta = length as i128 * (n - 2 * rooted.subtree_size[v] as i128);
        values[v] = (values[parent] as i128 + delta) as u64;
    }
    let optimum = *values.values().iter().min().expect("trees are nonempty");
    let medians = values
        .iter()
        .filter(|&(_, &f)| f == optimum)
        .map(|(v, _)| v)
        .collect();
    Ok(OneMedianValues {
        values,
        medians,
        optimum,
    })
}

/// Closed form for the unit path `1 - ... - n`: the optimal 1-median
/// vertices and `f*_1`, which is `n²/4` for even `n` and `(n²-1)/4` for odd.
pub fn unit_path_1median(n: usize) -> (Vec<Vertex>, u64) {
    assert!(n >= 1, "path needs a vertex");
    let value = (n as u64 * n as u64) / 4;
    let medians = if n.is_multiple_of(2) {
        vec![n / 2, n / 2 + 1]
    } else {
        vec![n.div_ceil(2)]
    };
    (medians, value)
}
