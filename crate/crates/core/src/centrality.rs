use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{is_connected, UniformHypergraph};
use crate::scalar::Scalar;

/// The three eigenvector centralities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cec,
    Zec,
    Hec,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Cec, Method::Zec, Method::Hec];

    pub fn name(self) -> &'static str {
        match self {
            Method::Cec => "cec",
            Method::Zec => "zec",
            Method::Hec => "hec",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cec" => Ok(Method::Cec),
            "zec" => Ok(Method::Zec),
            "hec" => Ok(Method::Hec),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// A centrality vector (1-norm normalized) with solver metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityResult<T = f64> {
    pub scores: Vec<T>,
    pub eigenvalue: T,
    pub residual: T,
    pub iterations: usize,
    pub converged: bool,
}

impl<T: Scalar> CentralityResult<T> {
    /// Node ids sorted by descending score, ties by ascending id.
    pub fn ranking(&self) -> Vec<usize> {
        ranking(&self.scores)
    }
}

/// Node ids sorted by descending score, ties by ascending id.
pub fn ranking<T: Scalar>(scores: &[T]) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..scores.len()).collect();
    ids.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    ids
}

/// Shared precondition of all three solvers.
pub(crate) fn require_connected<T: Scalar>(h: &UniformHypergraph<T>) -> Result<()> {
    if h.uniformity() < 3 {
        return Err(Error::InvalidUniformity { m: h.uniformity(), min: 3 });
    }
    if !is_connected(h) {
        return Err(Error::NotConnected);
    }
    Ok(())
}

pub(crate) fn check_start<T: Scalar>(n: usize, x0: &[T]) -> Result<()> {
    if x0.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: x0.len() });
    }
    if x0.iter().any(|&v| !(v >= T::zero()) || !v.is_finite()) {
        return Err(Error::InvalidArgument("start vector must be finite and nonnegative".into()));
    }
    if x0.iter().all(|&v| v == T::zero()) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}
