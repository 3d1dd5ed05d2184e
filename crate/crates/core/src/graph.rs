//! Immutable undirected simple graphs in compressed adjacency form, vertex
//! sets, and dominating-set validation.

use std::fmt;
use std::time::Duration;

use crate::error::GraphError;

pub type Vertex = u32;

/// Undirected simple graph. Neighbor lists are sorted and stored back to back
/// in `targets`; the neighbors of `v` are `targets[offsets[v]..offsets[v + 1]]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

/// A freshly built graph together with what normalization removed.
#[derive(Debug, Clone)]
pub struct BuildOutcome {
    pub graph: Graph,
    pub dropped_self_loops: usize,
    pub dropped_duplicates: usize,
}

/// Builds a simple graph on `n` vertices. Self-loops are dropped and parallel
/// edges (in either orientation) are collapsed; both are counted.
pub fn build_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<BuildOutcome, GraphError> {
    if n > Vertex::MAX as usize {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut pairs = Vec::with_capacity(edges.len());
    let mut dropped_self_loops = 0;
    for &(u, v) in edges {
        if u as usize >= n || v as usize >= n {
            return Err(GraphError::EndpointOutOfRange { u, v, n });
        }
        if u == v {
            dropped_self_loops += 1;
            continue;
        }
        pairs.push(if u < v { (u, v) } else { (v, u) });
    }
    pairs.sort_unstable();
    let before = pairs.len();
    pairs.dedup();
    let dropped_duplicates = before - pairs.len();

    let mut degree = vec![0usize; n];
    for &(u, v) in &pairs {
        degree[u as usize] += 1;
        degree[v as usize] += 1;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for d in &degree {
        offsets.push(offsets.last().unwrap() + d);
    }
    let mut fill = offsets[..n].to_vec();
    let mut targets = vec![0; offsets[n]];
    // Lexicographic pair order hands every vertex its smaller neighbors
    // first (ascending), then its larger ones (ascending).
    for &(u, v) in &pairs {
        targets[fill[u as usize]] = v;
        fill[u as usize] += 1;
        targets[fill[v as usize]] = u;
        fill[v as usize] += 1;
    }
    debug_assert!((0..n).all(|v| targets[offsets[v]..offsets[v + 1]]
        .windows(2)
        .all(|w| w[0] < w[1])));

    Ok(BuildOutcome {
        graph: Graph { offsets, targets },
        dropped_self_loops,
        dropped_duplicates,
    })
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Shorthand for [`build_graph`] that discards the normalization counts.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        build_graph(n, edges).map(|b| b.graph)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + Clone {
        0..self.n() as Vertex
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// `N[v]` in ascending order.
    pub fn closed_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let nbrs = self.neighbors(v);
        let split = nbrs.partition_point(|&u| u < v);
        nbrs[..split]
            .iter()
            .copied()
            .chain(std::iter::once(v))
            .chain(nbrs[split..].iter().copied())
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every unordered edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn targets(&self) -> &[Vertex] {
        &self.targets
    }

    /// True iff every vertex is in `s` or has a neighbor in `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        debug_assert_eq!(s.universe(), self.n());
        self.vertices()
            .all(|v| s.contains(v) || self.neighbors(v).iter().any(|&u| s.contains(u)))
    }

    /// `N(S) \ S`: vertices outside `s` with at least one neighbor in `s`.
    pub fn open_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in s.iter() {
            for &u in self.neighbors(v) {
                if !s.contains(u) {
                    out.insert(u);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .finish()
    }
}

/// Subset of the vertices `0..universe` with O(1) membership tests.
/// Iteration follows insertion order; use [`VertexSet::to_sorted_vec`] for a
/// canonical listing.
#[derive(Clone, Default)]
pub struct VertexSet {
    mask: Vec<bool>,
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            mask: vec![false; universe],
            members: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            mask: vec![true; universe],
            members: (0..universe as Vertex).collect(),
        }
    }

    /// Collects `iter` into a set, ignoring repeats. Panics on ids outside the
    /// universe.
    pub fn from_iter<I: IntoIterator<Item = Vertex>>(universe: usize, iter: I) -> Self {
        let mut s = VertexSet::new(universe);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    /// Returns whether `v` was newly added.
    pub fn insert(&mut self, v: Vertex) -> bool {
        let slot = &mut self.mask[v as usize];
        if *slot {
            return false;
        }
        *slot = true;
        self.members.push(v);
        true
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.mask.get(v as usize).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.members
    }

    pub fn to_sorted_vec(&self) -> Vec<Vertex> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for v in other.iter() {
            self.insert(v);
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Vertices of the universe not in `self`, ascending.
    pub fn complement(&self) -> VertexSet {
        VertexSet::from_iter(
            self.universe(),
            (0..self.universe() as Vertex).filter(|&v| !self.contains(v)),
        )
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for VertexSet {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.to_sorted_vec()).finish()
    }
}

/// Common output of every dominating-set algorithm.
#[derive(Debug, Clone)]
pub struct DominatingSetResult {
    pub set: VertexSet,
    pub algorithm: String,
    pub elapsed: Duration,
    /// Named scalars an algorithm wants reported alongside the set, such as
    /// the LP objective it rounded or the size of a forced prefix.
    pub details: Vec<(&'static str, f64)>,
}

impl DominatingSetResult {
    pub fn new(set: VertexSet, algorithm: impl Into<String>, elapsed: Duration) -> Self {
        DominatingSetResult {
            set,
            algorithm: algorithm.into(),
            elapsed,
            details: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn elapsed_secs(&self) -> f64 {
        self.elapsed.as_secs_f64()
    }

    pub fn with_detail(mut self, key: &'static str, value: f64) -> Self {
        self.details.push((key, value));
        self
    }

    pub fn detail(&self, key: &str) -> Option<f64> {
        self.details.iter().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }
}
