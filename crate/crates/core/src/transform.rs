//! Reductions from the optimum-matching problem (maximum cardinality, then
//! minimum weight) on arbitrary bipartite graphs to minimum-weight perfect
//! matching.
//!
//! Three constructions are provided:
//!
//! * **First doubling** `G_d`: the graph, a flipped copy `V' → U'` and link
//!   edges `u_i u'_i`, `v'_j v_j` weighing `2·s·W`. Always has a perfect
//!   matching, so it works on any instance.
//! * **Second doubling** `G_s`: `G_d` without the `v'_j v_j` links, with the
//!   `u_i u'_i` links weighing an arbitrary constant `k`. Needs a matching
//!   covering `V`, but does not inflate weights.
//! * **Artificial vertices** `G_a`: pads `V` with `n - s` vertices joined to
//!   all of `U` at weight `k`. Cheap when the imbalance is small.
//!
//! In all three, the vertex layout puts the parent's vertices first and the
//! parent's edges first (with unchanged ids), so a perfect matching of the
//! transform restricts back by keeping edges tagged [`EdgeOrigin::Original`].

use crate::allowed::{optimal_edges, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, WeightedBipartiteGraph, MAX_ABS_WEIGHT};
use crate::matching::{max_cardinality_matching, Matching};
use crate::solver::solve_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    FirstDoubling,
    SecondDoubling,
    ArtificialVertices,
}

/// Which transform [`optimum_matching`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    FirstDoubling,
    SecondDoubling,
    ArtificialVertices,
    /// First doubling when no matching covers `V`; artificial vertices when
    /// `n - s <= n/8`; second doubling otherwise.
    #[default]
    Auto,
}

/// Where an edge of a transformed graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeOrigin {
    /// A parent edge, kept as is.
    Original(EdgeId),
    /// `v'_j u'_i` mirroring parent edge `u_i v_j`.
    FlippedCopy(EdgeId),
    /// `u_i u'_i`.
    LinkU(usize),
    /// `v'_j v_j`.
    LinkV(usize),
    /// `u_i` to artificial vertex `v_{s + slot}`.
    Dummy { u: usize, slot: usize },
}

#[derive(Debug, Clone)]
pub struct TransformedInstance {
    pub kind: TransformKind,
    pub graph: WeightedBipartiteGraph,
    pub origin: Vec<EdgeOrigin>,
    /// The free constant of the second doubling and artificial-vertex transforms.
    pub k: Option<i64>,
}

fn check_weight(w: i128) -> Result<i64> {
    if w.unsigned_abs() > MAX_ABS_WEIGHT as u128 {
        Err(Error::WeightOverflow { weight: w })
    } else {
        Ok(w as i64)
    }
}

/// Weight of the link edges of the first doubling.
///
/// `2·s·W`, with `W` taken as at least 1: when all weights are zero a zero
/// link weight would make the all-links matching optimal and the reduction
/// would lose cardinality.
pub fn first_doubling_link_weight(g: &WeightedBipartiteGraph) -> i128 {
    2 * g.s() as i128 * g.max_abs_weight().max(1) as i128
}

/// Builds the doubled graph. `U_d = U ∪ V'` (V' at indices `n..n+s`),
/// `V_d = V ∪ U'` (U' at indices `s..s+n`).
fn doubled(g: &WeightedBipartiteGraph, link_u: i64, link_v: Option<i64>) -> (Vec<Edge>, Vec<EdgeOrigin>) {
    let (n, s) = (g.n(), g.s());
    let mut edges = Vec::with_capacity(2 * g.m() + n + s);
    let mut origin = Vec::with_capacity(edges.capacity());
    for (id, e) in g.edges().iter().enumerate() {
        edges.push(*e);
        origin.push(EdgeOrigin::Original(id));
    }
    for (id, e) in g.edges().iter().enumerate() {
        edges.push(Edge { u: n + e.v, v: s + e.u, w: e.w });
        origin.push(EdgeOrigin::FlippedCopy(id));
    }
    for u in 0..n {
        edges.push(Edge { u, v: s + u, w: link_u });
        origin.push(EdgeOrigin::LinkU(u));
    }
    if let Some(link_v) = link_v {
        for v in 0..s {
            edges.push(Edge { u: n + v, v, w: link_v });
            origin.push(EdgeOrigin::LinkV(v));
        }
    }
    (edges, origin)
}

/// `G_d`: `|U_d| = |V_d| = n + s`, `|E_d| = 2m + n + s`.
pub fn first_doubling(g: &WeightedBipartiteGraph) -> Result<TransformedInstance> {
    let link = check_weight(first_doubling_link_weight(g))?;
    let (edges, origin) = doubled(g, link, Some(link));
    let size = g.n() + g.s();
    Ok(TransformedInstance {
        kind: TransformKind::FirstDoubling,
        graph: WeightedBipartiteGraph::from_parts(size, size, edges, false),
        origin,
        k: None,
    })
}

/// `G_s = G_d \ E_V` with `E_U` links weighing `k`: `|E_s| = 2m + n`.
pub fn second_doubling(g: &WeightedBipartiteGraph, k: i64) -> Result<TransformedInstance> {
    let k = check_weight(k as i128)?;
    let (edges, origin) = doubled(g, k, None);
    let size = g.n() + g.s();
    Ok(TransformedInstance {
        kind: TransformKind::SecondDoubling,
        graph: WeightedBipartiteGraph::from_parts(size, size, edges, false),
        origin,
        k: Some(k),
    })
}

/// `G_a`: `V` padded to `n` vertices, dummy edges `U × (V_a \ V)` weighing `k`:
/// `|E_a| = m + n(n - s)`.
pub fn artificial_vertices(g: &WeightedBipartiteGraph, k: i64) -> Result<TransformedInstance> {
    let k = check_weight(k as i128)?;
    let (n, s) = (g.n(), g.s());
    let mut edges: Vec<Edge> = g.edges().to_vec();
    let mut origin: Vec<EdgeOrigin> = (0..g.m()).map(EdgeOrigin::Original).collect();
    for u in 0..n {
        for slot in 0..n - s {
            edges.push(Edge { u, v: s + slot, w: k });
            origin.push(EdgeOrigin::Dummy { u, slot });
        }
    }
    Ok(TransformedInstance {
        kind: TransformKind::ArtificialVertices,
        graph: WeightedBipartiteGraph::from_parts(n, n, edges, false),
        origin,
        k: Some(k),
    })
}

pub fn transform(g: &WeightedBipartiteGraph, kind: TransformKind, k: i64) -> Result<TransformedInstance> {
    match kind {
        TransformKind::FirstDoubling => first_doubling(g),
        TransformKind::SecondDoubling => second_doubling(g, k),
        TransformKind::ArtificialVertices => artificial_vertices(g, k),
    }
}

/// `M = N ∩ E`: the parent edges of a perfect matching of the transform.
pub fn restrict_back(parent: &WeightedBipartiteGraph, t: &TransformedInstance, n: &Matching) -> Result<Matching> {
    n.require_perfect(&t.graph)?;
    let kept = n.edges().into_iter().filter_map(|id| match t.origin[id] {
        EdgeOrigin::Original(parent_id) => Some(parent_id),
        _ => None,
    });
    Matching::from_edges(parent, kept)
}

fn covers_small_side(g: &WeightedBipartiteGraph) -> bool {
    max_cardinality_matching(g).cardinality() == g.s()
}

/// Resolves a strategy to a concrete transform, checking its precondition.
pub fn resolve_strategy(g: &WeightedBipartiteGraph, strategy: Strategy) -> Result<TransformKind> {
    let kind = match strategy {
        Strategy::FirstDoubling => return Ok(TransformKind::FirstDoubling),
        Strategy::SecondDoubling => TransformKind::SecondDoubling,
        Strategy::ArtificialVertices => TransformKind::ArtificialVertices,
        Strategy::Auto => {
            if !covers_small_side(g) {
                return Ok(TransformKind::FirstDoubling);
            }
            return Ok(if (g.n() - g.s()) * 8 <= g.n() {
                TransformKind::ArtificialVertices
            } else {
                TransformKind::SecondDoubling
            });
        }
    };
    if covers_small_side(g) {
        Ok(kind)
    } else {
        Err(Error::CoverageRequired)
    }
}

/// An optimum matching (maximum cardinality, then minimum weight) with `k = 0`.
pub fn optimum_matching(g: &WeightedBipartiteGraph, strategy: Strategy) -> Result<Matching> {
    optimum_matching_with_k(g, strategy, 0)
}

/// Transform, solve the perfect-matching problem exactly, restrict back.
pub fn optimum_matching_with_k(g: &WeightedBipartiteGraph, strategy: Strategy, k: i64) -> Result<Matching> {
    let t = transform(g, resolve_strategy(g, strategy)?, k)?;
    let solved = solve_exact(&t.graph)?;
    restrict_back(g, &t, &solved.matching)
}

/// Edges of `g` lying in some optimum matching: `E'_opt ∩ E` over a transform.
pub fn optimal_edges_general(g: &WeightedBipartiteGraph, strategy: Strategy) -> Result<EdgeSet> {
    optimal_edges_general_with_k(g, strategy, 0)
}

pub fn optimal_edges_general_with_k(g: &WeightedBipartiteGraph, strategy: Strategy, k: i64) -> Result<EdgeSet> {
    let t = transform(g, resolve_strategy(g, strategy)?, k)?;
    let solved = solve_exact(&t.graph)?;
    let lifted = optimal_edges(&t.graph, &solved.prices)?;
    Ok(lifted
        .iter()
        .filter_map(|&id| match t.origin[id] {
            EdgeOrigin::Original(parent_id) => Some(parent_id),
            _ => None,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;

    fn unbalanced() -> WeightedBipartiteGraph {
        WeightedBipartiteGraph::new(2, 1, [(0, 0, 5), (1, 0, 3)]).unwrap()
    }

    #[test]
    fn first_doubling_sizes() {
        let t = first_doubling(&fig1()).unwrap();
        assert_eq!((t.graph.n(), t.graph.s(), t.graph.m()), (6, 6, 18));
        let link: Vec<i64> = t
            .origin
            .iter()
            .zip(t.graph.edges())
            .filter(|(o, _)| matches!(o, EdgeOrigin::LinkU(_) | EdgeOrigin::LinkV(_)))
            .map(|(_, e)| e.w)
            .collect();
        assert_eq!(link, vec![12; 6]);

        let single = WeightedBipartiteGraph::new(1, 1, [(0, 0, 4)]).unwrap();
        let t = first_doubling(&single).unwrap();
        assert_eq!(t.graph.m(), 4);
        assert_eq!(t.graph.edge(2).w, 8);
    }

    #[test]
    fn first_doubling_of_edgeless_graph() {
        let g = WeightedBipartiteGraph::new(2, 1, []).unwrap();
        let t = first_doubling(&g).unwrap();
        assert_eq!(t.graph.m(), 3);
        let n = solve_exact(&t.graph).unwrap().matching;
        assert_eq!(n.cardinality(), 3);
        assert_eq!(restrict_back(&g, &t, &n).unwrap().cardinality(), 0);
    }

    #[test]
    fn restrict_links_only() {
        let g = fig1();
        let t = first_doubling(&g).unwrap();
        let links = (12..18).collect::<Vec<_>>();
        let n = Matching::from_edges(&t.graph, links).unwrap();
        assert_eq!(restrict_back(&g, &t, &n).unwrap().cardinality(), 0);
        let partial = Matching::from_edges(&t.graph, [12]).unwrap();
        assert!(matches!(restrict_back(&g, &t, &partial), Err(Error::NotPerfect { .. })));
    }

    #[test]
    fn second_doubling_sizes_and_k() {
        let g = fig1();
        let t = second_doubling(&g, 0).unwrap();
        assert_eq!((t.graph.n(), t.graph.s(), t.graph.m()), (6, 6, 15));
        let a = optimum_matching_with_k(&g, Strategy::SecondDoubling, 0).unwrap();
        let b = optimum_matching_with_k(&g, Strategy::SecondDoubling, 7).unwrap();
        assert_eq!((a.cardinality(), a.weight(&g)), (b.cardinality(), b.weight(&g)));
        assert_eq!(a.weight(&g), 3);
    }

    #[test]
    fn second_doubling_needs_coverage() {
        // v1 is isolated.
        let g = WeightedBipartiteGraph::new(2, 2, [(0, 0, 1), (1, 0, 1)]).unwrap();
        let t = second_doubling(&g, 0).unwrap();
        assert!(solve_exact(&t.graph).is_err());
        assert_eq!(optimum_matching(&g, Strategy::SecondDoubling), Err(Error::CoverageRequired));
        assert_eq!(optimum_matching(&g, Strategy::ArtificialVertices), Err(Error::CoverageRequired));
        assert_eq!(optimum_matching(&g, Strategy::Auto).unwrap().cardinality(), 1);
    }

    #[test]
    fn artificial_vertices_cases() {
        let g = fig1();
        let t = artificial_vertices(&g, 0).unwrap();
        assert_eq!(t.graph.edges(), g.edges());

        let g = unbalanced();
        let t = artificial_vertices(&g, 0).unwrap();
        assert_eq!((t.graph.n(), t.graph.s(), t.graph.m()), (2, 2, 4));
        let n = solve_exact(&t.graph).unwrap().matching;
        assert_eq!(restrict_back(&g, &t, &n).unwrap().edges(), vec![1]);
    }

    #[test]
    fn optimum_on_unbalanced_instance() {
        let g = unbalanced();
        for strategy in [Strategy::FirstDoubling, Strategy::SecondDoubling, Strategy::ArtificialVertices, Strategy::Auto] {
            let m = optimum_matching(&g, strategy).unwrap();
            assert_eq!(m.edges(), vec![1]);
            assert_eq!(m.weight(&g), 3);
            assert_eq!(optimal_edges_general(&g, strategy).unwrap().as_slice(), &[1]);
        }
        let tied = WeightedBipartiteGraph::new(2, 1, [(0, 0, 4), (1, 0, 4)]).unwrap();
        assert_eq!(optimal_edges_general(&tied, Strategy::Auto).unwrap().as_slice(), &[0, 1]);
    }

    #[test]
    fn all_zero_weights_keep_cardinality() {
        let g = WeightedBipartiteGraph::new(2, 2, [(0, 0, 0), (1, 1, 0)]).unwrap();
        let m = optimum_matching(&g, Strategy::FirstDoubling).unwrap();
        assert_eq!(m.cardinality(), 2);
    }

    #[test]
    fn link_weight_overflow() {
        let g = WeightedBipartiteGraph::new(2, 2, [(0, 0, MAX_ABS_WEIGHT)]).unwrap();
        assert!(matches!(first_doubling(&g), Err(Error::WeightOverflow { .. })));
    }
}
