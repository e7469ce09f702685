//! The small worked instance used across tests, examples and docs.
//!
//! `U = {u0, u1, u2}`, `V = {v0, v1, v2}` with edges (in id order)
//! `u0v0:1, u0v1:1, u1v1:1, u1v2:2, u2v1:2, u2v2:1`. Its unique minimum-weight
//! perfect matching is `{u0v0, u1v1, u2v2}` (edge ids 0, 2, 5) of weight 3.

use crate::graph::WeightedBipartiteGraph;
use crate::matching::Matching;
use crate::prices::DualPrices;

pub fn fig1() -> WeightedBipartiteGraph {
    WeightedBipartiteGraph::new(3, 3, [(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)])
        .expect("valid fixture")
}

/// `π = (-2, 0, 1)`, `p = (3, 1, 0)`.
pub fn fig1_p1() -> DualPrices {
    DualPrices::integral(vec![-2, 0, 1], vec![3, 1, 0])
}

/// `π = (0, 0, 1)`, `p = (1, 1, 0)`.
pub fn fig1_p2() -> DualPrices {
    DualPrices::integral(vec![0, 0, 1], vec![1, 1, 0])
}

/// `{u0v0, u1v1, u2v2}`.
pub fn fig1_best(g: &WeightedBipartiteGraph) -> Matching {
    Matching::from_edges(g, [0, 2, 5]).expect("valid fixture")
}

/// Instance text for [`fig1`] in the line-oriented file format.
pub const FIG1_TEXT: &str = "c three-by-three worked example
p bip 3 3 6
e 1 1 1
e 1 2 1
e 2 2 1
e 2 3 2
e 3 2 2
e 3 3 1
";
