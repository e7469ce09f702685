//! Exhaustive reference computations for small instances.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::Matching;

/// Largest side size the oracle accepts.
pub const ORACLE_MAX_SIDE: usize = 8;

/// Every perfect matching of minimum weight, by exhaustive search.
///
/// Requires `n <= 8`. Returns an empty list when there is no perfect
/// matching. Results are sorted by their edge-id lists.
pub fn brute_force_min_weight_pms(g: &WeightedBipartiteGraph) -> Result<Vec<Matching>> {
    if g.n() > ORACLE_MAX_SIDE {
        return Err(Error::ScaleGuard { n: g.n(), s: g.s() });
    }
    if !g.is_square() {
        return Ok(Vec::new());
    }
    let mut best: Option<i64> = None;
    let mut found: Vec<Vec<EdgeId>> = Vec::new();
    let mut chosen = Vec::with_capacity(g.n());
    search(g, 0, 0, 0, &mut chosen, &mut best, &mut found);
    found.sort();
    Ok(found
        .into_iter()
        .map(|ids| Matching::from_edges(g, ids).expect("search yields matchings"))
        .collect())
}

fn search(
    g: &WeightedBipartiteGraph,
    u: usize,
    used: u32,
    weight: i64,
    chosen: &mut Vec<EdgeId>,
    best: &mut Option<i64>,
    found: &mut Vec<Vec<EdgeId>>,
) {
    if u == g.n() {
        match *best {
            Some(b) if weight > b => {}
            Some(b) if weight == b => found.push(chosen.clone()),
            _ => {
                *best = Some(weight);
                found.clear();
                found.push(chosen.clone());
            }
        }
        return;
    }
    for &id in g.u_edges(u) {
        let e = g.edge(id);
        if used & (1 << e.v) != 0 {
            continue;
        }
        chosen.push(id);
        search(g, u + 1, used | (1 << e.v), weight + e.w, chosen, best, found);
        chosen.pop();
    }
}
