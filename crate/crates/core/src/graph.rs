//! The instance model: an immutable bipartite graph with integer edge weights.
//!
//! Vertices are dense 0-based indices on two sides. The constructor normalizes
//! the sides so that `|U| >= |V|`; when it has to swap them it records the fact
//! so the file layer can report results with the caller's original labels.
//! Edge identities are positions in the input order and survive normalization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of an edge in its graph's edge list.
pub type EdgeId = usize;

/// Largest admissible `|weight|`. Keeps `2·s·W` and accumulated sums inside `i64`.
pub const MAX_ABS_WEIGHT: i64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    U,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub fn u(index: usize) -> Self {
        VertexRef { side: Side::U, index }
    }

    pub fn v(index: usize) -> Self {
        VertexRef { side: Side::V, index }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::U => write!(f, "u{}", self.index),
            Side::V => write!(f, "v{}", self.index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: i64,
}

/// Compressed adjacency: `targets[offsets[x]..offsets[x + 1]]` are the edges of vertex `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<EdgeId>,
}

impl Adjacency {
    fn build(count: usize, edges: &[Edge], key: impl Fn(&Edge) -> usize) -> Self {
        let mut offsets = vec![0usize; count + 1];
        for e in edges {
            offsets[key(e) + 1] += 1;
        }
        for i in 0..count {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; edges.len()];
        for (id, e) in edges.iter().enumerate() {
            let k = key(e);
            targets[fill[k]] = id;
            fill[k] += 1;
        }
        Adjacency { offsets, targets }
    }

    fn of(&self, x: usize) -> &[EdgeId] {
        &self.targets[self.offsets[x]..self.offsets[x + 1]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBipartiteGraph {
    n: usize,
    s: usize,
    edges: Vec<Edge>,
    u_adj: Adjacency,
    v_adj: Adjacency,
    max_abs_weight: i64,
    swapped: bool,
}

impl WeightedBipartiteGraph {
    /// Builds and validates a graph from `(u, v, w)` triples with 0-based indices.
    ///
    /// Rejects out-of-range endpoints, repeated `(u, v)` pairs (reported at the
    /// later occurrence) and weights beyond [`MAX_ABS_WEIGHT`]. Swaps the sides
    /// if `n < s`.
    pub fn new(n: usize, s: usize, edges: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().map(|(u, v, w)| Edge { u, v, w }).collect();
        for e in &edges {
            if e.u >= n {
                return Err(Error::VertexOutOfRange { vertex: VertexRef::u(e.u) });
            }
            if e.v >= s {
                return Err(Error::VertexOutOfRange { vertex: VertexRef::v(e.v) });
            }
            if e.w.unsigned_abs() > MAX_ABS_WEIGHT as u64 {
                return Err(Error::WeightOutOfBounds { weight: e.w });
            }
        }
        let mut keyed: Vec<(usize, usize, EdgeId)> = edges.iter().enumerate().map(|(i, e)| (e.u, e.v, i)).collect();
        keyed.sort_unstable();
        if let Some(pair) = keyed.windows(2).find(|p| p[0].0 == p[1].0 && p[0].1 == p[1].1) {
            return Err(Error::DuplicateEdge { u: pair[1].0, v: pair[1].1 });
        }
        if n < s {
            let flipped = edges.into_iter().map(|e| Edge { u: e.v, v: e.u, w: e.w }).collect();
            Ok(Self::from_parts(s, n, flipped, true))
        } else {
            Ok(Self::from_parts(n, s, edges, false))
        }
    }

    /// Assembles a graph from already-validated parts.
    pub(crate) fn from_parts(n: usize, s: usize, edges: Vec<Edge>, swapped: bool) -> Self {
        let u_adj = Adjacency::build(n, &edges, |e| e.u);
        let v_adj = Adjacency::build(s, &edges, |e| e.v);
        let max_abs_weight = edges.iter().map(|e| e.w.abs()).max().unwrap_or(0);
        WeightedBipartiteGraph { n, s, edges, u_adj, v_adj, max_abs_weight, swapped }
    }

    /// The subgraph on the same vertex set keeping `ids` (in that order).
    /// Edge `i` of the result is edge `ids[i]` of `self`.
    pub fn subgraph(&self, ids: &[EdgeId]) -> Self {
        let edges = ids.iter().map(|&id| self.edges[id]).collect();
        Self::from_parts(self.n, self.s, edges, self.swapped)
    }

    /// Same topology as `self` with every weight replaced by `weight(id, edge)`.
    pub fn reweighted(&self, mut weight: impl FnMut(EdgeId, &Edge) -> i64) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| Edge { w: weight(id, e), ..*e })
            .collect();
        Self::from_parts(self.n, self.s, edges, self.swapped)
    }

    /// `|U|`, the larger side.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|V|`, the smaller side.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// `W`, the largest absolute edge weight (0 for an edgeless graph).
    pub fn max_abs_weight(&self) -> i64 {
        self.max_abs_weight
    }

    /// Whether the sides were swapped during normalization.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn is_square(&self) -> bool {
        self.n == self.s
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn u_edges(&self, u: usize) -> &[EdgeId] {
        self.u_adj.of(u)
    }

    pub fn v_edges(&self, v: usize) -> &[EdgeId] {
        self.v_adj.of(v)
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.n || v >= self.s {
            return None;
        }
        self.u_edges(u).iter().copied().find(|&id| self.edges[id].v == v)
    }

    /// Endpoints of `id` in the caller's orientation (before normalization).
    pub fn original_endpoints(&self, id: EdgeId) -> (usize, usize) {
        let e = self.edges[id];
        if self.swapped {
            (e.v, e.u)
        } else {
            (e.u, e.v)
        }
    }

    /// Looks up an edge by endpoints given in the caller's orientation.
    pub fn find_original_edge(&self, a: usize, b: usize) -> Option<EdgeId> {
        if self.swapped {
            self.find_edge(b, a)
        } else {
            self.find_edge(a, b)
        }
    }

    /// Maps a vertex of the normalized graph back to the caller's orientation.
    pub fn original_vertex(&self, x: VertexRef) -> VertexRef {
        if !self.swapped {
            return x;
        }
        match x.side {
            Side::U => VertexRef::v(x.index),
            Side::V => VertexRef::u(x.index),
        }
    }
}
