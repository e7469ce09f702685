//! Edges that belong to some perfect matching, and `E_opt`.
//!
//! Given one perfect matching `M`, orient matched edges V→U and all other
//! edges U→V. An unmatched edge lies in some perfect matching iff it lies on
//! an `M`-alternating cycle, i.e. iff its endpoints share a strongly
//! connected component of the oriented graph.

use std::slice;

use crate::error::Result;
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::{perfect_matching, Matching};
use crate::prices::DualPrices;
use crate::tight::build_gcs;

/// A sorted set of edge ids of some parent graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    /// Sorts and deduplicates `ids`.
    pub fn new(mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet(ids)
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> slice::Iter<'_, EdgeId> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<EdgeId> {
        self.0
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a EdgeId;
    type IntoIter = slice::Iter<'a, EdgeId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet::new(iter.into_iter().collect())
    }
}

/// Edges of `g` lying in at least one perfect matching.
pub fn allowed_edges(g: &WeightedBipartiteGraph) -> Result<EdgeSet> {
    let m = perfect_matching(g)?;
    let mask = allowed_mask(g, &m);
    Ok((0..g.m()).filter(|&id| mask[id]).collect())
}

/// `E_opt`: edges of `g` lying in at least one minimum-weight perfect matching,
/// computed as the allowed edges of `G_cs(P)` for optimal prices `P`.
pub fn optimal_edges(g: &WeightedBipartiteGraph, prices: &DualPrices) -> Result<EdgeSet> {
    let gcs = build_gcs(g, prices)?;
    let local = allowed_edges(gcs.graph())?;
    Ok(local.iter().map(|&id| gcs.parent_id(id)).collect())
}

/// `mask[id]` is true iff edge `id` is in `m` or on an `m`-alternating cycle.
///
/// `m` must cover every non-isolated vertex; isolated vertices are ignored.
pub(crate) fn allowed_mask(g: &WeightedBipartiteGraph, m: &Matching) -> Vec<bool> {
    let n = g.n();
    let node_count = n + g.s();
    // Arcs: U vertex u -> n + v for unmatched edges; n + v -> u for its matched edge.
    let mut offsets = vec![0usize; node_count + 1];
    for (id, e) in g.edges().iter().enumerate() {
        if m.contains(g, id) {
            offsets[n + e.v + 1] += 1;
        } else {
            offsets[e.u + 1] += 1;
        }
    }
    for i in 0..node_count {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut arcs = vec![0usize; g.m()];
    for (id, e) in g.edges().iter().enumerate() {
        let (from, to) = if m.contains(g, id) { (n + e.v, e.u) } else { (e.u, n + e.v) };
        arcs[fill[from]] = to;
        fill[from] += 1;
    }

    let component = strongly_connected_components(node_count, &offsets, &arcs);
    g.edges()
        .iter()
        .enumerate()
        .map(|(id, e)| m.contains(g, id) || component[e.u] == component[n + e.v])
        .collect()
}

/// Tarjan's algorithm with an explicit stack. Returns a component id per node.
fn strongly_connected_components(node_count: usize, offsets: &[usize], arcs: &[usize]) -> Vec<usize> {
    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; node_count];
    let mut low = vec![0usize; node_count];
    let mut on_stack = vec![false; node_count];
    let mut component = vec![UNVISITED; node_count];
    let mut stack = Vec::new();
    let mut frames: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_component = 0;

    for start in 0..node_count {
        if index[start] != UNVISITED {
            continue;
        }
        frames.push((start, offsets[start]));
        index[start] = next_index;
        low[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;

        while let Some(&(x, cursor)) = frames.last() {
            if cursor < offsets[x + 1] {
                let y = arcs[cursor];
                frames.last_mut().expect("non-empty").1 += 1;
                if index[y] == UNVISITED {
                    index[y] = next_index;
                    low[y] = next_index;
                    next_index += 1;
                    stack.push(y);
                    on_stack[y] = true;
                    frames.push((y, offsets[y]));
                } else if on_stack[y] {
                    low[x] = low[x].min(index[y]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[x]);
            }
            if low[x] == index[x] {
                loop {
                    let y = stack.pop().expect("root is on the stack");
                    on_stack[y] = false;
                    component[y] = next_component;
                    if y == x {
                        break;
                    }
                }
                next_component += 1;
            }
        }
    }
    component
}
