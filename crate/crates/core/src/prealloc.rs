//! Preallocation: among all minimum-weight perfect matchings, find one using
//! as many preferred edges as possible.
//!
//! Every perfect matching of `G_cs(P)` is optimal for the original weights, so
//! it suffices to solve a 0/1-weighted assignment on `G_cs(P)` where preferred
//! edges cost 0 and all others cost 1.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::Matching;
use crate::prices::DualPrices;
use crate::solver::solve_exact;
use crate::tight::build_gcs;

/// The preferred edge set `E_p`, as sorted parent edge ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PreferenceSet {
    edges: Vec<EdgeId>,
}

impl PreferenceSet {
    pub fn new(g: &WeightedBipartiteGraph, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut edges: Vec<EdgeId> = ids.into_iter().collect();
        if let Some(&id) = edges.iter().find(|&&id| id >= g.m()) {
            return Err(Error::EdgeIdOutOfRange { id });
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(PreferenceSet { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edges.binary_search(&id).is_ok()
    }

    /// `w_p(e)`: 0 for preferred edges, 1 otherwise.
    pub fn preference_weight(&self, id: EdgeId) -> i64 {
        if self.contains(id) {
            0
        } else {
            1
        }
    }

    /// `|M ∩ E_p|`.
    pub fn hits(&self, m: &Matching) -> usize {
        m.edges().into_iter().filter(|&id| self.contains(id)).count()
    }
}

/// A minimum-weight perfect matching of `g` maximizing `|M ∩ E_p|`, given optimal prices.
pub fn preallocate(g: &WeightedBipartiteGraph, prices: &DualPrices, prefs: &PreferenceSet) -> Result<Matching> {
    let gcs = build_gcs(g, prices)?;
    let weighted = gcs.graph().reweighted(|local, _| prefs.preference_weight(gcs.parent_id(local)));
    let inner = solve_exact(&weighted)?;
    Ok(gcs.lift(&inner.matching))
}
