//! Clique-motif eigenvector centrality: the Perron vector of the motif
//! matrix `W`, by power iteration.
//!
//! For `m >= 3` every edge induces a triangle in the graph of `W`, so the
//! graph is not bipartite and the Perron root is the unique eigenvalue of
//! largest magnitude; plain power iteration converges.

use crate::centrality::{check_start, require_connected, CentralityResult};
use crate::error::Result;
use crate::hypergraph::UniformHypergraph;
use crate::linalg::{dist1, norm1, normalize_one_norm};
use crate::scalar::Scalar;
use crate::tensor::{motif_matrix, SparseSymmetricMatrix};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERS: usize = 100_000;

/// CEC from the uniform start vector.
pub fn cec<T: Scalar>(h: &UniformHypergraph<T>, tol: T, max_iters: usize) -> Result<CentralityResult<T>> {
    let n = h.node_count();
    cec_from(h, &vec![T::one(); n], tol, max_iters)
}

/// CEC from a caller-supplied nonnegative start.
///
/// Stops when `‖Wc/‖Wc‖₁ - c‖₁ <= tol`; the returned `c` is the iterate the
/// test was made on, so its residual `‖Wc - λc‖₁` is at most `tol·λ`.
pub fn cec_from<T: Scalar>(
    h: &UniformHypergraph<T>,
    x0: &[T],
    tol: T,
    max_iters: usize,
) -> Result<CentralityResult<T>> {
    require_connected(h)?;
    check_start(h.node_count(), x0)?;
    let w = motif_matrix(h);
    Ok(power_iterate(&w, normalize_one_norm(x0)?, tol, max_iters))
}

fn power_iterate<T: Scalar>(
    w: &SparseSymmetricMatrix<T>,
    mut c: Vec<T>,
    tol: T,
    max_iters: usize,
) -> CentralityResult<T> {
    let mut y = vec![T::zero(); c.len()];
    let mut iterations = 0;
    loop {
        w.mul_vec_into(&c, &mut y);
        let lambda = norm1(&y);
        y.iter_mut().for_each(|v| *v = *v / lambda);
        let change = dist1(&y, &c);
        if change <= tol || iterations >= max_iters {
            return CentralityResult {
                residual: lambda * change,
                eigenvalue: lambda,
                iterations,
                converged: change <= tol,
                scores: c,
            };
        }
        std::mem::swap(&mut c, &mut y);
        iterations += 1;
    }
}

/// Length-`ell` path counts `W^ell e`. `ell = 0` gives the all-ones vector.
///
/// Integer-exact for unweighted hypergraphs while entries stay below `2^53`.
pub fn path_counts<T: Scalar>(h: &UniformHypergraph<T>, ell: usize) -> Vec<T> {
    let w = motif_matrix(h);
    let mut p = vec![T::one(); h.node_count()];
    let mut next = p.clone();
    for _ in 0..ell {
        w.mul_vec_into(&p, &mut next);
        std::mem::swap(&mut p, &mut next);
    }
    p
}

/// `‖W c - λ c‖₁` for an arbitrary candidate.
pub fn cec_residual<T: Scalar>(h: &UniformHypergraph<T>, c: &[T], lambda: T) -> Result<T> {
    let wc = motif_matrix(h).mul_vec(c)?;
    Ok(wc.iter().zip(c).map(|(&a, &b)| (a - lambda * b).abs()).sum())
}
