//! Simple undirected graphs on at most 64 vertices, one `u64` bitset row per vertex.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{input, Error, Result};

/// Vertex capacity of the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some host graph, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        vs.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members strictly greater than `v`.
    pub fn above(self, v: usize) -> VertexSet {
        if v + 1 >= MAX_VERTICES {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u64::MAX << (v + 1)))
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} exceeds capacity")));
        }
        Ok(VertexSet::from_vertices(vs))
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph on vertices `0..n`.
///
/// Rows are symmetric and loop-free; every constructor and mutator maintains that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph",
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u},{v}) out of range for n={n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Adds the edge `uv`. Panics if either endpoint is out of range or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u},{v})");
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Copy of this graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return input(format!("vertex {v} out of range for n={}", self.n));
        }
        Ok(())
    }

    /// `d(v) = |N(v)|`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.rows[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.rows[v] & set.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `N(X)`: the vertices adjacent to every member of `xs`.
    pub fn common_neighborhood(&self, xs: VertexSet) -> Result<VertexSet> {
        if xs.is_empty() {
            return input("common neighborhood of the empty set is undefined");
        }
        if !xs.is_subset(self.vertices()) {
            return input(format!("vertex set {xs:?} not contained in 0..{}", self.n));
        }
        Ok(self.common_neighbors_unchecked(xs))
    }

    pub(crate) fn common_neighbors_unchecked(&self, xs: VertexSet) -> VertexSet {
        xs.iter()
            .fold(self.vertices(), |acc, x| acc.intersection(self.neighbors(x)))
    }

    /// `N(x,y) = N(x) ∩ N(y)`.
    #[inline]
    pub fn common_neighbors(&self, x: usize, y: usize) -> VertexSet {
        VertexSet(self.rows[x] & self.rows[y])
    }

    /// Codegree `d(x,y)`.
    #[inline]
    pub fn codegree(&self, x: usize, y: usize) -> usize {
        (self.rows[x] & self.rows[y]).count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).above(u).iter().map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in row-major order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertices();
        (0..self.n).flat_map(move |u| {
            all.difference(self.neighbors(u))
                .above(u)
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices().0;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| !r & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Disjoint union of `self` and `other` plus every edge between them.
    /// Vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n).map_err(|_| Error::Capacity {
            what: "join",
            requested: n,
            limit: MAX_VERTICES,
        })?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(n).0 & !left;
        for v in 0..self.n {
            g.rows[v] = self.rows[v] | right;
        }
        for v in 0..other.n {
            g.rows[self.n + v] = other.rows[v] << self.n | left;
        }
        Ok(g)
    }

    /// Adds `k` twins of `v`: new vertices adjacent to exactly `N(v)`.
    pub fn duplicate_vertex(&self, v: usize, k: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if k == 0 {
            return input("duplication count must be at least 1");
        }
        let n = self.n + k;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "duplicate_vertex",
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = self.clone();
        let nbrs = self.neighbors(v);
        g.rows.resize(n, 0);
        g.n = n;
        for copy in self.n..n {
            for u in nbrs {
                g.add_edge(copy, u);
            }
        }
        Ok(g)
    }

    /// Subgraph induced on `set`, vertices renumbered in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let vs = set.to_vec();
        self.permuted(&vs)
    }

    /// Graph whose vertex `i` is `order[i]` of `self`. With `order` shorter than `n`
    /// this is the induced subgraph on those vertices.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let mut g = Graph {
            n: order.len(),
            rows: vec![0; order.len()],
        };
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Appends one vertex adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "add_vertex",
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        if !nbrs.is_subset(self.vertices()) {
            return input("neighbors of new vertex out of range");
        }
        let mut g = self.clone();
        g.rows.push(0);
        g.n = n;
        for u in nbrs {
            g.add_edge(n - 1, u);
        }
        Ok(g)
    }

    /// Raw adjacency rows.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
