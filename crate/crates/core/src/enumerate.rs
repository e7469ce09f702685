//! Streaming enumeration of perfect matchings and of minimum-weight perfect matchings.
//!
//! Binary partition: at each node, trim the active edges to those lying in
//! some perfect matching, pick a matched edge `e` on an alternating cycle and
//! split into "e forced in" and "e forced out". Both children are feasible,
//! so every leaf (a graph with a unique perfect matching) emits a distinct
//! matching and no branch is wasted.

use crate::allowed::allowed_mask;
use crate::error::Result;
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::{max_cardinality_matching, perfect_matching, Matching};
use crate::prices::DualPrices;
use crate::tight::build_gcs;

/// Receives matchings one at a time; stops accepting after `limit`.
pub struct EnumerationSink<F> {
    callback: F,
    limit: Option<usize>,
    count: usize,
}

impl<F: FnMut(&Matching)> EnumerationSink<F> {
    pub fn new(callback: F) -> Self {
        EnumerationSink { callback, limit: None, count: 0 }
    }

    pub fn with_limit(callback: F, limit: usize) -> Self {
        EnumerationSink { callback, limit: Some(limit), count: 0 }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_full(&self) -> bool {
        self.limit.is_some_and(|limit| self.count >= limit)
    }

    fn emit(&mut self, m: &Matching) {
        if !self.is_full() {
            (self.callback)(m);
            self.count += 1;
        }
    }
}

/// Collects every perfect matching of `g` (beware: the count can be exponential).
pub fn collect_perfect_matchings(g: &WeightedBipartiteGraph) -> Vec<Matching> {
    let mut out = Vec::new();
    enumerate_perfect_matchings(g, &mut EnumerationSink::new(|m: &Matching| out.push(m.clone())));
    out
}

struct Node {
    active: Vec<EdgeId>,
    forced: Vec<EdgeId>,
}

/// Emits every perfect matching of `g` exactly once. Returns how many were emitted
/// by this call.
pub fn enumerate_perfect_matchings<F: FnMut(&Matching)>(
    g: &WeightedBipartiteGraph,
    sink: &mut EnumerationSink<F>,
) -> usize {
    let start = sink.count();
    if !g.is_square() {
        return 0;
    }
    let mut stack = vec![Node { active: (0..g.m()).collect(), forced: Vec::new() }];
    while let Some(Node { active, forced }) = stack.pop() {
        if sink.is_full() {
            break;
        }
        let sub = g.subgraph(&active);
        let m = max_cardinality_matching(&sub);
        if m.cardinality() + forced.len() < g.n() {
            continue;
        }
        let mask = allowed_mask(&sub, &m);
        let branch = (0..sub.m()).find(|&id| mask[id] && !m.contains(&sub, id));
        let Some(free) = branch else {
            let ids = forced.iter().copied().chain(m.edges().into_iter().map(|id| active[id]));
            sink.emit(&Matching::from_edges(g, ids).expect("forced edges and the leaf matching are disjoint"));
            continue;
        };

        // The matched edge at the same U vertex lies on the same alternating cycle.
        let pivot_local = m.mate_of_u(sub.edge(free).u).expect("perfect on live vertices");
        let pivot = active[pivot_local];
        let (pu, pv) = (sub.edge(pivot_local).u, sub.edge(pivot_local).v);
        let trimmed: Vec<EdgeId> = (0..sub.m()).filter(|&id| mask[id]).map(|id| active[id]).collect();

        let without: Vec<EdgeId> = trimmed.iter().copied().filter(|&id| id != pivot).collect();
        let with: Vec<EdgeId> = trimmed
            .into_iter()
            .filter(|&id| {
                let e = g.edge(id);
                e.u != pu && e.v != pv
            })
            .collect();
        let mut forced_with = forced.clone();
        forced_with.push(pivot);
        stack.push(Node { active: without, forced });
        stack.push(Node { active: with, forced: forced_with });
    }
    sink.count() - start
}

/// Emits every minimum-weight perfect matching of `g`, given optimal prices, by
/// enumerating the perfect matchings of `G_cs(P)`.
pub fn enumerate_min_weight_pms<F: FnMut(&Matching)>(
    g: &WeightedBipartiteGraph,
    prices: &DualPrices,
    sink: &mut EnumerationSink<F>,
) -> Result<usize> {
    let gcs = build_gcs(g, prices)?;
    perfect_matching(gcs.graph())?;
    let remaining = sink.limit.map(|limit| limit.saturating_sub(sink.count));
    let mut lifted = EnumerationSink { callback: |m: &Matching| sink.emit(&gcs.lift(m)), limit: remaining, count: 0 };
    Ok(enumerate_perfect_matchings(gcs.graph(), &mut lifted))
}
