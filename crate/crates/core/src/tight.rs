//! The tight subgraph `G_cs(P)`: edges with zero reduced cost under `P`.
//!
//! When `P` is optimal, the perfect matchings of `G_cs(P)` are exactly the
//! minimum-weight perfect matchings of the parent instance, whatever
//! optimal `P` was used.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::Matching;
use crate::prices::{DualPrices, Price};

#[derive(Debug, Clone)]
pub struct TightSubgraph<'g> {
    parent: &'g WeightedBipartiteGraph,
    prices: DualPrices,
    /// Parent ids of the tight edges, ascending. Local edge `i` is `edges[i]`.
    edges: Vec<EdgeId>,
    graph: WeightedBipartiteGraph,
}

/// Builds `G_cs(P)` in one pass over the edges.
///
/// Fails with [`Error::InfeasibleDual`] at the first edge with negative slack.
pub fn build_gcs<'g>(g: &'g WeightedBipartiteGraph, prices: &DualPrices) -> Result<TightSubgraph<'g>> {
    prices.check_shape(g)?;
    let mut edges = Vec::new();
    for id in 0..g.m() {
        match prices.slack_units(g, id) {
            0 => edges.push(id),
            s if s < 0 => return Err(Error::InfeasibleDual { edge: id }),
            _ => {}
        }
    }
    let graph = g.subgraph(&edges);
    Ok(TightSubgraph { parent: g, prices: prices.clone(), edges, graph })
}

impl<'g> TightSubgraph<'g> {
    pub fn parent(&self) -> &'g WeightedBipartiteGraph {
        self.parent
    }

    pub fn prices(&self) -> &DualPrices {
        &self.prices
    }

    /// Parent ids of the tight edges, ascending.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// The tight edges as a graph on the parent's vertex set.
    pub fn graph(&self) -> &WeightedBipartiteGraph {
        &self.graph
    }

    pub fn parent_id(&self, local: EdgeId) -> EdgeId {
        self.edges[local]
    }

    pub fn contains(&self, parent_id: EdgeId) -> bool {
        self.edges.binary_search(&parent_id).is_ok()
    }

    /// Non-tight parent edges with their (positive) slack.
    pub fn dropped(&self) -> Vec<(EdgeId, Price)> {
        (0..self.parent.m())
            .filter(|id| !self.contains(*id))
            .map(|id| (id, self.prices.slack(self.parent, id)))
            .collect()
    }

    /// Re-expresses a matching of [`graph`](Self::graph) in parent edge ids.
    pub fn lift(&self, m: &Matching) -> Matching {
        Matching::from_edges(self.parent, m.edges().into_iter().map(|id| self.edges[id]))
            .expect("a matching of a subgraph is a matching of the parent")
    }
}
