//! H-eigenvector centrality: the unique positive solution of
//! `T c^{m-1} = λ c^[m-1]`.
//!
//! Iterates `x ← normalize₁((T x^{m-1})^[1/(m-1)])`. At each iterate the
//! ratios `(T x^{m-1})_i / x_i^{m-1}` bracket the Perron H-eigenvalue, and
//! iteration stops once the bracket is relatively narrower than `tol`.
//!
//! `λ` includes the `(m-1)!` tensor symmetry factor: a single unweighted
//! edge has `λ = (m-1)!`.

use crate::centrality::{check_start, require_connected, CentralityResult};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::linalg::normalize_one_norm;
use crate::scalar::Scalar;
use crate::tensor::apply;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERS: usize = 10_000;

pub fn hec<T: Scalar>(h: &UniformHypergraph<T>, tol: T, max_iters: usize) -> Result<CentralityResult<T>> {
    hec_from(h, &vec![T::one(); h.node_count()], tol, max_iters)
}

/// HEC from a caller-supplied start. The start's scale is irrelevant.
pub fn hec_from<T: Scalar>(
    h: &UniformHypergraph<T>,
    x0: &[T],
    tol: T,
    max_iters: usize,
) -> Result<CentralityResult<T>> {
    require_connected(h)?;
    check_start(h.node_count(), x0)?;
    let root = T::one() / T::of_usize(h.uniformity() - 1);
    let degree = (h.uniformity() - 1) as i32;
    if x0.iter().any(|&v| v <= T::zero()) {
        return Err(Error::InvalidArgument("H-eigenvector iteration needs a strictly positive start".into()));
    }
    let mut x = normalize_one_norm(x0)?;
    let mut iterations = 0;
    loop {
        let y = apply(h, &x)?;
        if y.iter().any(|&v| !(v > T::zero())) {
            return Err(Error::Internal("nonpositive contraction of a positive iterate".into()));
        }
        let (lo, hi) = x.iter().zip(&y).fold((T::infinity(), T::zero()), |(lo, hi), (&xi, &yi)| {
            let r = yi / xi.powi(degree);
            (lo.min(r), hi.max(r))
        });
        let done = (hi - lo) <= tol * hi;
        if done || iterations >= max_iters {
            let lambda = (lo + hi) / T::of(2.0);
            let residual = x
                .iter()
                .zip(&y)
                .map(|(&xi, &yi)| (yi - lambda * xi.powi(degree)).abs())
                .sum();
            return Ok(CentralityResult { scores: x, eigenvalue: lambda, residual, iterations, converged: done });
        }
        let rooted: Vec<T> = y.iter().map(|&v| v.powf(root)).collect();
        x = normalize_one_norm(&rooted)?;
        iterations += 1;
    }
}

/// `‖T c^{m-1} - λ c^[m-1]‖₁`
pub fn hec_residual<T: Scalar>(h: &UniformHypergraph<T>, c: &[T], lambda: T) -> Result<T> {
    let degree = (h.uniformity() - 1) as i32;
    let y = apply(h, c)?;
    Ok(c.iter().zip(&y).map(|(&ci, &yi)| (yi - lambda * ci.powi(degree)).abs()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = UniformHypergraph<f64>;

    #[test]
    fn single_edge() {
        let h = H::from_edges(3, 3, &[&[0, 1, 2]]);
        let r = hec(&h, 1e-12, 100).unwrap();
        assert!(r.converged);
        assert!(r.scores.iter().all(|s| (s - 1.0 / 3.0).abs() < 1e-15));
        assert!((r.eigenvalue - 2.0).abs() < 1e-12);
        let h4 = H::from_edges(4, 4, &[&[0, 1, 2, 3]]);
        assert!((hec(&h4, 1e-12, 100).unwrap().eigenvalue - 6.0).abs() < 1e-11);
    }

    #[test]
    fn start_scale_does_not_change_eigenvalue() {
        let h = H::from_edges(3, 5, &[&[0, 1, 2], &[0, 3, 4], &[1, 2, 3]]);
        let x0 = [0.3, 0.1, 0.7, 0.2, 0.9];
        let a = hec_from(&h, &x0, 1e-12, 10_000).unwrap();
        let scaled: Vec<f64> = x0.iter().map(|v| 10.0 * v).collect();
        let b = hec_from(&h, &scaled, 1e-12, 10_000).unwrap();
        assert!((a.eigenvalue - b.eigenvalue).abs() < 1e-10);
    }

    #[test]
    fn start_with_zeros_is_rejected() {
        // the zero would hop between the two nodes of a petal forever
        let h = H::from_edges(3, 5, &[&[0, 1, 2], &[0, 3, 4]]);
        assert!(matches!(
            hec_from(&h, &[1.0, 1.0, 0.0, 1.0, 1.0], 1e-10, 10_000),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn rejects_bad_input() {
        let h = H::from_edges(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert!(matches!(hec(&h, 1e-10, 10), Err(Error::NotConnected)));
        let h = H::from_edges(3, 3, &[&[0, 1, 2]]);
        assert!(matches!(hec_from(&h, &[0.0; 3], 1e-10, 10), Err(Error::ZeroVector)));
        assert!(hec_from(&h, &[1.0, -1.0, 1.0], 1e-10, 10).is_err());
    }
}
