//! Eigenvector centralities for m-uniform hypergraphs.
//!
//! A hypergraph's adjacency tensor is kept implicit as its list of edges.
//! Three centralities are computed from it:
//!
//! * [`cec`](cec::cec): Perron vector of the clique-motif matrix `W`
//!   (`W_uv` = number of edges containing `u` and `v`).
//! * [`zec`](zec::zec): positive Z-eigenvector, `T c^{m-1} = λ c`. Not
//!   necessarily unique; found by multi-restart dynamical systems or SS-HOPM.
//! * [`hec`](hec::hec): the unique positive H-eigenvector,
//!   `T c^{m-1} = λ c^[m-1]`.
//!
//! Scores are normalized to unit 1-norm. All numeric code is generic over
//! [`Scalar`] (`f32` or `f64`); the aliases below fix it to `f64`.

// Index loops mirror the tensor notation; `!(a > b)` deliberately treats NaN as failure.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod analytic;
pub mod cec;
pub mod centrality;
mod error;
pub mod format;
pub mod hec;
pub mod hypergraph;
pub mod ingest;
pub mod linalg;
mod scalar;
pub mod tensor;
pub mod zec;

pub use centrality::{ranking, CentralityResult, Method};
pub use error::{Error, Result};
pub use hypergraph::{is_connected, largest_component, validate, NodeId, NodeLabelMap, UniformHypergraph, Violation};
pub use scalar::{factorial, Scalar};
pub use zec::{Stability, ZecAlgorithm};

pub type Real = f64;
pub type Hypergraph = UniformHypergraph<Real>;
pub type Centrality = CentralityResult<Real>;
pub type ZPair = zec::ZEigenpair<Real>;
pub type Ensemble = zec::ZecEnsemble<Real>;
pub type ZOptions = zec::ZecOptions<Real>;
pub type SparseMatrix = tensor::SparseSymmetricMatrix<Real>;
pub type Comparison = analysis::RankComparison<Real>;

pub type HypergraphF32 = UniformHypergraph<f32>;
pub type CentralityF32 = CentralityResult<f32>;

/// Library version recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
