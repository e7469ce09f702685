//! Optimum matchings in integer-weighted bipartite graphs.
//!
//! The crate computes minimum-weight perfect matchings together with optimal
//! dual prices, and uses those prices to build the tight subgraph `G_cs(P)`
//! of zero-reduced-cost edges. Because the perfect matchings of `G_cs(P)` are
//! exactly the minimum-weight perfect matchings of the instance, several
//! harder questions reduce to unweighted problems on it:
//!
//! * [`allowed::optimal_edges`]: every edge used by some optimal matching;
//! * [`enumerate::enumerate_min_weight_pms`]: stream all optimal matchings;
//! * [`prealloc::preallocate`]: an optimal matching using the most preferred edges.
//!
//! [`transform`] extends these to unbalanced or infeasible instances, where the
//! goal is an *optimum* matching (maximum cardinality, then minimum weight).
//!
//! ```
//! use bimatch::fixtures::fig1;
//! use bimatch::solver::solve_via_rounding;
//! use bimatch::allowed::optimal_edges;
//!
//! let g = fig1();
//! let solved = solve_via_rounding(&g).unwrap();
//! assert_eq!(solved.matching.weight(&g), 3);
//! assert_eq!(optimal_edges(&g, &solved.prices).unwrap().as_slice(), &[0, 2, 5]);
//! ```

pub mod allowed;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod prealloc;
pub mod prices;
pub mod solver;
pub mod tight;
pub mod transform;

pub use allowed::{allowed_edges, optimal_edges, EdgeSet};
pub use enumerate::{enumerate_min_weight_pms, enumerate_perfect_matchings, EnumerationSink};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Side, VertexRef, WeightedBipartiteGraph};
pub use matching::{matching_weight, max_cardinality_matching, Matching};
pub use prealloc::{preallocate, PreferenceSet};
pub use prices::{DualPrices, Price};
pub use solver::{solve_auction, solve_exact, solve_via_rounding, SolveResult};
pub use tight::{build_gcs, TightSubgraph};
pub use transform::{optimum_matching, Strategy, TransformKind, TransformedInstance};
