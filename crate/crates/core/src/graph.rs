//! Undirected graphs with integer edge lengths and interdiction costs.
//!
//! Vertices are `1..=n` and edges `1..=m` in list order. Graphs are immutable
//! once built; edge deletion produces a new graph together with the id map
//! back to the parent.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// 1-based vertex id.
pub type Vertex = usize;
/// 1-based edge id (position in the edge list).
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub length: u64,
    pub cost: u64,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex, length: u64, cost: u64) -> Self {
        Edge { u, v, length, cost }
    }

    /// Unit length, unit cost.
    pub fn unit(u: Vertex, v: Vertex) -> Self {
        Edge::new(u, v, 1, 1)
    }

    /// The endpoint opposite `x`.
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (Vertex, Vertex) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Dense per-vertex storage indexed by 1-based vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexMap<T>(Vec<T>);

impl<T: Clone> VertexMap<T> {
    pub fn filled(n: usize, value: T) -> Self {
        VertexMap(vec![value; n])
    }
}

impl<T> VertexMap<T> {
    /// Wraps a vector whose entry `i` belongs to vertex `i + 1`.
    pub fn from_vec(values: Vec<T>) -> Self {
        VertexMap(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &T)> + '_ {
        self.0.iter().enumerate().map(|(i, x)| (i + 1, x))
    }

    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }
}

impl<T> Index<Vertex> for VertexMap<T> {
    type Output = T;

    fn index(&self, v: Vertex) -> &T {
        &self.0[v - 1]
    }
}

impl<T> IndexMut<Vertex> for VertexMap<T> {
    fn index_mut(&mut self, v: Vertex) -> &mut T {
        &mut self.0[v - 1]
    }
}

/// Structural class of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphShape {
    /// A path, with its vertices listed end to end starting at the
    /// lower-numbered endpoint. A single vertex is a path.
    Path(Vec<Vertex>),
    Tree,
    General,
    Disconnected,
}

impl GraphShape {
    /// Paths are trees too.
    pub fn is_tree(&self) -> bool {
        matches!(self, GraphShape::Path(_) | GraphShape::Tree)
    }

    pub fn path_order(&self) -> Option<&[Vertex]> {
        match self {
            GraphShape::Path(order) => Some(order),
            _ => None,
        }
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphShape::Path(_) => f.write_str("path"),
            GraphShape::Tree => f.write_str("tree"),
            GraphShape::General => f.write_str("general graph"),
            GraphShape::Disconnected => f.write_str("disconnected graph"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on vertices `1..=n`.
    ///
    /// Rejects `n = 0`, out-of-range endpoints, self-loops, parallel edges
    /// and zero interdiction costs. Zero lengths are allowed.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("graph needs at least one vertex".into()));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            let id = i + 1;
            if e.u == 0 || e.v == 0 || e.u > n || e.v > n {
                return Err(Error::Input(format!(
                    "edge {id} ({}, {}) has an endpoint outside 1..={n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::Input(format!("edge {id} is a self-loop at {}", e.u)));
            }
            if e.cost == 0 {
                return Err(Error::Input(format!("edge {id} has interdiction cost 0")));
            }
            if !seen.insert(e.key()) {
                return Err(Error::Input(format!(
                    "edge {id} ({}, {}) duplicates an earlier edge",
                    e.u, e.v
                )));
            }
            adj[e.u - 1].push((e.v, id));
            adj[e.v - 1].push((e.u, id));
        }
        Ok(Graph { n, edges, adj })
    }

    /// Path `1 - 2 - ... - n` with the given edge lengths and unit costs.
    pub fn path(lengths: &[u64]) -> Self {
        let edges = lengths
            .iter()
            .enumerate()
            .map(|(i, &len)| Edge::new(i + 1, i + 2, len, 1))
            .collect();
        Graph::new(lengths.len() + 1, edges).expect("path construction is valid")
    }

    /// Unit-length, unit-cost path on `n >= 1` vertices.
    pub fn unit_path(n: usize) -> Self {
        Graph::path(&vec![1; n.saturating_sub(1)])
    }

    /// Unit-length, unit-cost graph from endpoint pairs.
    pub fn from_unit_edges(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        Graph::new(n, pairs.iter().map(|&(u, v)| Edge::unit(u, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges paired with their ids.
    pub fn edge_ids(&self) -> impl Iterator<Item = (EdgeId, &Edge)> + '_ {
        self.edges.iter().enumerate().map(|(i, e)| (i + 1, e))
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id - 1]
    }

    /// Neighbours of `v` with the connecting edge id, in edge-list order.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    /// Id of the edge joining `u` and `v`, if any.
    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.neighbors(u)
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, id)| id)
    }

    /// Degree-1 vertices in ascending order.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn has_unit_lengths(&self) -> bool {
        self.edges.iter().all(|e| e.length == 1)
    }

    pub fn has_unit_costs(&self) -> bool {
        self.edges.iter().all(|e| e.cost == 1)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v)
    }

    pub fn classify(&self) -> GraphShape {
        let component_count = self.component_labels().1;
        if component_count > 1 {
            return GraphShape::Disconnected;
        }
        if self.edges.len() != self.n - 1 {
            return GraphShape::General;
        }
        if self.vertices().any(|v| self.degree(v) > 2) {
            return GraphShape::Tree;
        }
        let start = self.vertices().find(|&v| self.degree(v) <= 1).unwrap_or(1);
        let mut order = Vec::with_capacity(self.n);
        let mut prev = 0;
        let mut cur = start;
        loop {
            order.push(cur);
            match self.neighbors(cur).iter().find(|&&(w, _)| w != prev) {
                Some(&(next, _)) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
        GraphShape::Path(order)
    }

    /// Shortest-path distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> VertexMap<Option<u64>> {
        self.distances_from_set(&[source])
    }

    /// Distance from every vertex to the nearest vertex of `sources`.
    pub fn distances_from_set(&self, sources: &[Vertex]) -> VertexMap<Option<u64>> {
        let mut dist: VertexMap<Option<u64>> = VertexMap::filled(self.n, None);
        let mut heap = BinaryHeap::new();
        for &s in sources {
            if dist[s] != Some(0) {
                dist[s] = Some(0);
                heap.push(Reverse((0u64, s)));
            }
        }
        while let Some(Reverse((d, v))) = heap.pop() {
            if dist[v].is_some_and(|best| d > best) {
                continue;
            }
            for &(w, id) in self.neighbors(v) {
                let nd = d + self.edge(id).length;
                if dist[w].is_none_or(|old| nd < old) {
                    dist[w] = Some(nd);
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        dist
    }

    /// All-pairs distances, row `i` holding distances from vertex `i + 1`.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<u64>>> {
        self.vertices()
            .map(|s| self.distances_from(s).into_vec())
            .collect()
    }

    /// Deletes the given edges. Ids must be valid and distinct.
    pub fn remove_edges(&self, ids: &[EdgeId]) -> Result<Subgraph> {
        let mut removed = vec![false; self.edges.len()];
        for &id in ids {
            if id == 0 || id > self.edges.len() {
                return Err(Error::Input(format!("unknown edge id {id}")));
            }
            if removed[id - 1] {
                return Err(Error::Input(format!("edge id {id} listed twice")));
            }
            removed[id - 1] = true;
        }
        let mut edges = Vec::with_capacity(self.edges.len() - ids.len());
        let mut edge_map = Vec::with_capacity(self.edges.len() - ids.len());
        for (id, e) in self.edge_ids() {
            if !removed[id - 1] {
                edges.push(*e);
                edge_map.push(id);
            }
        }
        let graph = Graph::new(self.n, edges).expect("subgraph of a valid graph is valid");
        Ok(Subgraph { graph, edge_map })
    }

    /// Per-vertex component label (0-based, numbered by smallest member) and
    /// the number of components.
    pub fn component_labels(&self) -> (VertexMap<usize>, usize) {
        let mut label = VertexMap::filled(self.n, usize::MAX);
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels();
        let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); count];
        let mut local = VertexMap::filled(self.n, 0);
        for v in self.vertices() {
            let c = label[v];
            members[c].push(v);
            local[v] = members[c].len();
        }
        let mut comp_edges: Vec<Vec<Edge>> = vec![Vec::new(); count];
        let mut comp_edge_maps: Vec<Vec<EdgeId>> = vec![Vec::new(); count];
        for (id, e) in self.edge_ids() {
            let c = label[e.u];
            comp_edges[c].push(Edge::new(local[e.u], local[e.v], e.length, e.cost));
            comp_edge_maps[c].push(id);
        }
        members
            .into_iter()
            .zip(comp_edges)
            .zip(comp_edge_maps)
            .map(|((vertices, edges), edge_map)| Component {
                graph: Graph::new(vertices.len(), edges).expect("induced subgraph is valid"),
                vertices,
                edge_map,
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 == 1
    }

    /// Roots a tree at `root`.
    pub fn root_tree(&self, root: Vertex) -> Result<RootedTree> {
        if !self.contains_vertex(root) {
            return Err(Error::Input(format!("root {root} is not a vertex")));
        }
        let shape = self.classify();
        if !shape.is_tree() {
            return Err(Error::Shape(format!("expected a tree, found a {shape}")));
        }
        let mut parent = VertexMap::filled(self.n, root);
        let mut parent_edge = VertexMap::filled(self.n, None);
        let mut depth = VertexMap::filled(self.n, 0u64);
        let mut visited = VertexMap::filled(self.n, false);
        let mut order = Vec::with_capacity(self.n);
        visited[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(w, id) in self.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    parent_edge[w] = Some(id);
                    depth[w] = depth[v] + self.edge(id).length;
                    order.push(w);
                }
            }
        }
        let mut subtree_size = VertexMap::filled(self.n, 1usize);
        for &v in order.iter().skip(1).rev() {
            let s = subtree_size[v];
            subtree_size[parent[v]] += s;
        }
        Ok(RootedTree {
            root,
            parent,
            parent_edge,
            subtree_size,
            depth,
            order,
        })
    }
}

/// Result of deleting edges: the remaining graph plus, for each of its edge
/// ids, the id the edge had in the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub edge_map: Vec<EdgeId>,
}

impl Subgraph {
    pub fn parent_edge(&self, id: EdgeId) -> EdgeId {
        self.edge_map[id - 1]
    }
}

/// One connected component, renumbered `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// Local vertex `i` is parent vertex `vertices[i - 1]`; ascending.
    pub vertices: Vec<Vertex>,
    /// Local edge `i` is parent edge `edge_map[i - 1]`.
    pub edge_map: Vec<EdgeId>,
}

impl Component {
    pub fn parent_vertex(&self, local: Vertex) -> Vertex {
        self.vertices[local - 1]
    }
}

/// A tree hung from a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: Vertex,
    /// The root is its own parent.
    pub parent: VertexMap<Vertex>,
    pub parent_edge: VertexMap<Option<EdgeId>>,
    /// Number of vertices in the subtree below and including each vertex.
    pub subtree_size: VertexMap<usize>,
    /// Weighted distance from the root.
    pub depth: VertexMap<u64>,
    /// Breadth-first order; every parent precedes its children.
    pub order: Vec<Vertex>,
}

impl RootedTree {
    pub fn children<'a>(
        &'a self,
        graph: &'a Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'a {
        graph
            .neighbors(v)
            .iter()
            .map(|&(w, _)| w)
            .filter(move |&w| w != self.root && self.parent[w] == v)
    }

    /// True when `descendant` lies in the subtree of `ancestor`.
    pub fn is_ancestor(&self, ancestor: Vertex, mut descendant: Vertex) -> bool {
        loop {
            if descendant == ancestor {
                return true;
            }
            if descendant == self.root {
                return false;
            }
            descendant = self.parent[descendant];
        }
    }
}
