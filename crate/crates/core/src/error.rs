use thiserror::Error;

use crate::hypergraph::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid hypergraph: {}", join_violations(.0))]
    InvalidHypergraph(Vec<Violation>),

    #[error("uniformity must be at least {min}, got {m}")]
    InvalidUniformity { m: usize, min: usize },

    #[error("edge {edge} has {len} nodes, expected {m}")]
    EdgeArity { edge: usize, len: usize, m: usize },

    #[error("{edges} edges but {weights} weights")]
    WeightCount { edges: usize, weights: usize },

    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("hypergraph has no edges")]
    EmptyHypergraph,

    #[error("hypergraph is not connected")]
    NotConnected,

    #[error("vector is zero")]
    ZeroVector,

    #[error("vector is constant; rank correlation is undefined")]
    ConstantVector,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("no convergence after {iterations} iterations (last change {last_change:e})")]
    NotConverged { iterations: usize, last_change: f64 },

    #[error(
        "none of the {restarts} restarts produced an accepted eigenpair \
         ({rejected_nonpositive} had zero entries, {failed} did not converge)"
    )]
    NoConvergedRestarts { restarts: usize, rejected_nonpositive: usize, failed: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("too many malformed lines: {malformed} of {total}")]
    TooManyMalformed { malformed: usize, total: usize },

    #[error("internal solver error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
