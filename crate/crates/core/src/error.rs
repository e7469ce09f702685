use thiserror::Error;

use crate::graph::{EdgeId, VertexRef};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range")]
    VertexOutOfRange { vertex: VertexRef },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("weight {weight} exceeds the bound 2^40")]
    WeightOutOfBounds { weight: i64 },

    #[error("edges {first} and {second} share an endpoint")]
    NotAMatching { first: EdgeId, second: EdgeId },

    #[error("matching is not perfect ({cardinality} edges, {n}+{s} vertices)")]
    NotPerfect { cardinality: usize, n: usize, s: usize },

    #[error("no perfect matching: vertex {vertex} cannot be covered")]
    Infeasible { vertex: VertexRef },

    #[error("graph is not square (|U| = {n}, |V| = {s})")]
    NotSquare { n: usize, s: usize },

    #[error("prices violate the dual constraint on edge {edge}")]
    InfeasibleDual { edge: EdgeId },

    #[error("price vectors have lengths ({pi}, {p}), expected ({n}, {s})")]
    PriceShape { pi: usize, p: usize, n: usize, s: usize },

    #[error("price denominator {den} does not divide {expected}")]
    PriceDenominator { den: i64, expected: i64 },

    #[error("matching and prices are not {epsilon}-optimal")]
    NotEpsOptimal { epsilon: String },

    #[error("epsilon must be positive, got {epsilon}")]
    InvalidEpsilon { epsilon: String },

    #[error("instance too large for the brute-force oracle (n = {n}, s = {s})")]
    ScaleGuard { n: usize, s: usize },

    #[error("no matching covers the smaller side; use the first doubling transform")]
    CoverageRequired,

    #[error("transformed weight {weight} exceeds the bound 2^40")]
    WeightOverflow { weight: i128 },

    #[error("edge id {id} out of range")]
    EdgeIdOutOfRange { id: EdgeId },

    #[error("edge ({u}, {v}) does not exist")]
    UnknownEdge { u: usize, v: usize },

    #[error("{0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
