//! Simple undirected graphs over dense vertex ids and the atomic edits the
//! generator is built from.
//!
//! Every edit returns a fresh [`Graph`]; inputs are never mutated. New
//! vertices always receive the next dense id (`n`), so the output of a
//! sequence of edits is fully determined by the input labeling.

use std::fmt;

use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Upper bound on the vertex count; adjacency rows are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("edge {0}{1} already present")]
    EdgeExists(VertexId, VertexId),
    #[error("edge {0}{1} not present")]
    MissingEdge(VertexId, VertexId),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    MissingVertex(VertexId, usize),
    #[error("graph would exceed {MAX_VERTICES} vertices")]
    TooManyVertices,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Iterate the set bits of a mask in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn bit(v: VertexId) -> u64 {
    1u64 << v
}

/// Unordered edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Edge, GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`, if `x` is an endpoint.
    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Adjacency is kept as one bitmask row per vertex. The rows are always
/// symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices);
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.check_pair(a, b)?;
            if g.has_edge(a, b) {
                return Err(GraphError::EdgeExists(a, b));
            }
            g.link(a, b);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adjacency row of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: VertexId) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> {
        bits(self.adj[v])
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n() && b < self.n() && self.adj[a] & bit(b) != 0
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n())
            .flat_map(move |u| bits(self.adj[u] & !((bit(u) << 1) - 1)).map(move |v| Edge { u, v }))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`, ascending.
    pub fn non_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let all = self.vertex_mask();
        (0..self.n()).flat_map(move |u| {
            let higher = all & !((bit(u) << 1) - 1);
            bits(higher & !self.adj[u]).map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|r| r.count_ones() == 3)
    }

    pub fn add_edge(&self, a: VertexId, b: VertexId) -> Result<Graph, GraphError> {
        self.check_pair(a, b)?;
        if self.has_edge(a, b) {
            return Err(GraphError::EdgeExists(a, b));
        }
        let mut g = self.clone();
        g.link(a, b);
        Ok(g)
    }

    pub fn delete_edge(&self, a: VertexId, b: VertexId) -> Result<Graph, GraphError> {
        self.check_pair(a, b)?;
        if !self.has_edge(a, b) {
            return Err(GraphError::MissingEdge(a, b));
        }
        let mut g = self.clone();
        g.unlink(a, b);
        Ok(g)
    }

    /// Remove `v`; vertices above `v` shift down by one so ids stay dense.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let low = bit(v) - 1;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| (row & low) | ((row >> 1) & !low))
            .collect();
        Ok(Graph { adj })
    }

    /// Split `v`: a new vertex `v' = n` takes over the edges `vu` and `vw`,
    /// and the edge `vv'` is added. Returns the new graph and `v'`.
    pub fn split_vertex(
        &self,
        v: VertexId,
        u: VertexId,
        w: VertexId,
    ) -> Result<(Graph, VertexId), GraphError> {
        self.check_vertex(v)?;
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(GraphError::InvalidArgument(format!(
                "split of {v} needs two distinct neighbours, got {u} twice"
            )));
        }
        if !self.has_edge(v, u) {
            return Err(GraphError::MissingEdge(v, u));
        }
        if !self.has_edge(v, w) {
            return Err(GraphError::MissingEdge(v, w));
        }
        if self.degree(v) < 3 {
            return Err(GraphError::InvalidArgument(format!(
                "split of {v} needs degree at least 3"
            )));
        }
        let mut g = self.grow()?;
        let x = self.n();
        g.unlink(v, u);
        g.unlink(v, w);
        g.link(x, u);
        g.link(x, w);
        g.link(v, x);
        Ok((g, x))
    }

    /// Replace edge `ab` by the path `a c b` through a new vertex `c = n`.
    pub fn subdivide_edge(
        &self,
        a: VertexId,
        b: VertexId,
    ) -> Result<(Graph, VertexId), GraphError> {
        self.check_pair(a, b)?;
        if !self.has_edge(a, b) {
            return Err(GraphError::MissingEdge(a, b));
        }
        let mut g = self.grow()?;
        let c = self.n();
        g.unlink(a, b);
        g.link(a, c);
        g.link(c, b);
        Ok((g, c))
    }

    /// Replace edge `ab` with `ac`, where `bc` is an edge and `ac` is not.
    pub fn flip_edge(&self, a: VertexId, b: VertexId, c: VertexId) -> Result<Graph, GraphError> {
        self.check_pair(a, b)?;
        self.check_pair(b, c)?;
        self.check_pair(a, c)?;
        if !self.has_edge(a, b) {
            return Err(GraphError::MissingEdge(a, b));
        }
        if !self.has_edge(b, c) {
            return Err(GraphError::MissingEdge(b, c));
        }
        if self.has_edge(a, c) {
            return Err(GraphError::EdgeExists(a, c));
        }
        let mut g = self.clone();
        g.unlink(a, b);
        g.link(a, c);
        Ok(g)
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut adj = vec![0u64; self.n()];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = bits(row).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Graph { adj }
    }

    /// The ring `0 - 3 - 4` and `1 - 2 - 5` joined by the rungs `01`, `23`
    /// and `45`. This is the labeling under which the prism's fourteen
    /// cycles read `015430`, `0125430`, ... .
    pub fn prism() -> Graph {
        Graph::from_edges(
            6,
            [
                (0, 3),
                (3, 4),
                (4, 0),
                (1, 2),
                (2, 5),
                (5, 1),
                (0, 1),
                (2, 3),
                (4, 5),
            ],
        )
        .expect("prism edges are valid")
    }

    /// `W_k`: rim `0..k` in order, hub `k`.
    pub fn wheel(k: usize) -> Result<Graph, GraphError> {
        if k < 3 {
            return Err(GraphError::InvalidArgument(format!(
                "wheel needs at least 3 rim vertices, got {k}"
            )));
        }
        let rim = (0..k).map(|i| (i, (i + 1) % k));
        let spokes = (0..k).map(|i| (i, k));
        Graph::from_edges(k + 1, rim.chain(spokes))
    }

    /// `K_{3,t}` with the small class on `0, 1, 2`.
    pub fn complete_bipartite_3(t: usize) -> Result<Graph, GraphError> {
        if t < 3 {
            return Err(GraphError::InvalidArgument(format!(
                "K_3,t needs t >= 3, got {t}"
            )));
        }
        let edges = (0..3).flat_map(|s| (3..3 + t).map(move |b| (s, b)));
        Graph::from_edges(3 + t, edges)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges)
    }

    pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidArgument(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    #[cfg(test)]
    pub(crate) fn is_well_formed(&self) -> bool {
        let all = self.vertex_mask();
        self.adj.iter().enumerate().all(|(v, &row)| {
            row & bit(v) == 0 && row & !all == 0 && bits(row).all(|u| self.adj[u] & bit(v) != 0)
        })
    }

    fn grow(&self) -> Result<Graph, GraphError> {
        if self.n() >= MAX_VERTICES {
            return Err(GraphError::TooManyVertices);
        }
        let mut g = self.clone();
        g.adj.push(0);
        Ok(g)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::MissingVertex(v, self.n()))
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            Err(GraphError::Loop(a))
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn link(&mut self, a: VertexId, b: VertexId) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    #[inline]
    pub(crate) fn unlink(&mut self, a: VertexId, b: VertexId) {
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
    }
}
