//! Matchings and Hopcroft–Karp maximum-cardinality matching.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Side, VertexRef, WeightedBipartiteGraph};

/// A set of vertex-disjoint edges, stored as the matched edge of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate_u: Vec<Option<EdgeId>>,
    mate_v: Vec<Option<EdgeId>>,
}

impl Matching {
    pub fn empty(g: &WeightedBipartiteGraph) -> Self {
        Matching { mate_u: vec![None; g.n()], mate_v: vec![None; g.s()] }
    }

    /// Validates that `ids` are pairwise vertex-disjoint edges of `g`.
    pub fn from_edges(g: &WeightedBipartiteGraph, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut m = Matching::empty(g);
        for id in ids {
            if id >= g.m() {
                return Err(Error::EdgeIdOutOfRange { id });
            }
            let e = g.edge(id);
            if let Some(other) = m.mate_u[e.u].or(m.mate_v[e.v]) {
                if other == id {
                    continue;
                }
                return Err(Error::NotAMatching { first: other, second: id });
            }
            m.mate_u[e.u] = Some(id);
            m.mate_v[e.v] = Some(id);
        }
        Ok(m)
    }

    /// Matched edge ids in ascending order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self.mate_u.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids
    }

    pub fn cardinality(&self) -> usize {
        self.mate_u.iter().flatten().count()
    }

    pub fn is_perfect(&self) -> bool {
        self.mate_u.len() == self.mate_v.len() && self.mate_u.iter().all(Option::is_some)
    }

    pub fn weight(&self, g: &WeightedBipartiteGraph) -> i64 {
        matching_weight(g, self)
    }

    pub fn mate_of_u(&self, u: usize) -> Option<EdgeId> {
        self.mate_u[u]
    }

    pub fn mate_of_v(&self, v: usize) -> Option<EdgeId> {
        self.mate_v[v]
    }

    pub fn contains(&self, g: &WeightedBipartiteGraph, id: EdgeId) -> bool {
        self.mate_u[g.edge(id).u] == Some(id)
    }

    /// First uncovered vertex, U side before V side.
    pub fn first_exposed(&self) -> Option<VertexRef> {
        let on_u = self.mate_u.iter().position(Option::is_none).map(VertexRef::u);
        on_u.or_else(|| self.mate_v.iter().position(Option::is_none).map(VertexRef::v))
    }

    pub fn covers(&self, x: VertexRef) -> bool {
        match x.side {
            Side::U => self.mate_u[x.index].is_some(),
            Side::V => self.mate_v[x.index].is_some(),
        }
    }

    pub(crate) fn insert(&mut self, g: &WeightedBipartiteGraph, id: EdgeId) {
        let e = g.edge(id);
        self.mate_u[e.u] = Some(id);
        self.mate_v[e.v] = Some(id);
    }

    /// Errors unless the matching is perfect in `g`.
    pub fn require_perfect(&self, g: &WeightedBipartiteGraph) -> Result<()> {
        if self.is_perfect() {
            Ok(())
        } else {
            Err(Error::NotPerfect { cardinality: self.cardinality(), n: g.n(), s: g.s() })
        }
    }
}

/// `w(M)`: the exact sum of matched edge weights.
pub fn matching_weight(g: &WeightedBipartiteGraph, m: &Matching) -> i64 {
    m.mate_u.iter().flatten().map(|&id| g.edge(id).w).sum()
}

/// A perfect matching of `g`, or [`Error::Infeasible`] naming an uncoverable
/// vertex. Exposed V vertices are preferred: isolated ones are always among them.
pub(crate) fn perfect_matching(g: &WeightedBipartiteGraph) -> Result<Matching> {
    let m = max_cardinality_matching(g);
    let exposed = (0..g.s())
        .map(VertexRef::v)
        .chain((0..g.n()).map(VertexRef::u))
        .find(|&x| !m.covers(x));
    match exposed {
        None => Ok(m),
        Some(vertex) => Err(Error::Infeasible { vertex }),
    }
}

const UNREACHED: usize = usize::MAX;

/// Maximum-cardinality matching by Hopcroft–Karp layered augmentation.
///
/// Deterministic: free U vertices and their edges are scanned in index order.
pub fn max_cardinality_matching(g: &WeightedBipartiteGraph) -> Matching {
    let mut m = Matching::empty(g);
    // Greedy warm start.
    for u in 0..g.n() {
        if let Some(&id) = g.u_edges(u).iter().find(|&&id| m.mate_v[g.edge(id).v].is_none()) {
            m.insert(g, id);
        }
    }

    let mut dist = vec![UNREACHED; g.n()];
    let mut cursor = vec![0usize; g.n()];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut via: Vec<EdgeId> = Vec::new();
    loop {
        queue.clear();
        for (u, d) in dist.iter_mut().enumerate() {
            if m.mate_u[u].is_none() {
                *d = 0;
                queue.push_back(u);
            } else {
                *d = UNREACHED;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &id in g.u_edges(u) {
                match m.mate_v[g.edge(id).v] {
                    None => found = true,
                    Some(back) => {
                        let next = g.edge(back).u;
                        if dist[next] == UNREACHED {
                            dist[next] = dist[u] + 1;
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        if !found {
            break;
        }

        cursor.iter_mut().for_each(|c| *c = 0);
        for root in 0..g.n() {
            if m.mate_u[root].is_some() || dist[root] != 0 {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                let adj = g.u_edges(u);
                if cursor[u] == adj.len() {
                    dist[u] = UNREACHED;
                    stack.pop();
                    via.pop();
                    continue;
                }
                let id = adj[cursor[u]];
                cursor[u] += 1;
                match m.mate_v[g.edge(id).v] {
                    None => {
                        via.push(id);
                        for &e in &via {
                            m.insert(g, e);
                        }
                        for &x in &stack {
                            dist[x] = UNREACHED;
                        }
                        break;
                    }
                    Some(back) => {
                        let next = g.edge(back).u;
                        if dist[next] == dist[u] + 1 {
                            via.push(id);
                            stack.push(next);
                        }
                    }
                }
            }
        }
    }
    m
}
