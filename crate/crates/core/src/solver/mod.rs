//! Primal–dual solvers for the minimum-weight perfect matching problem.
//!
//! [`solve_exact`] is a successive-shortest-path solver that maintains
//! integral potentials. [`solve_auction`] is an ε-scaling auction producing
//! ε-optimal pairs in units of `1/(n+1)`, and [`solve_via_rounding`] feeds its
//! output through [`round_to_optimal`](crate::prices::round_to_optimal).

mod auction;
mod exact;

use serde::Serialize;

pub use auction::{solve_auction, solve_via_rounding};
pub use exact::solve_exact;

use crate::error::{Error, Result};
use crate::graph::WeightedBipartiteGraph;
use crate::matching::{perfect_matching, Matching};
use crate::prices::DualPrices;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Scaling phases (1 for the exact solver).
    pub phases: usize,
    /// Augmentations (exact) or bids (auction).
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub matching: Matching,
    pub prices: DualPrices,
    pub stats: SolveStats,
}

/// Rejects non-square graphs and graphs without a perfect matching.
pub(crate) fn require_perfect_matchable(g: &WeightedBipartiteGraph) -> Result<()> {
    if !g.is_square() {
        return Err(Error::NotSquare { n: g.n(), s: g.s() });
    }
    perfect_matching(g).map(|_| ())
}
