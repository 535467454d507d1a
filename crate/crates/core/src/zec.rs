//! Z-eigenvector centrality.
//!
//! A Z-eigenpair satisfies `T x^{m-1} = λ x` with `‖x‖₂ = 1`. Positive
//! solutions exist on connected hypergraphs but need not be unique, so
//! [`zec`] runs many seeded restarts, clusters the converged vectors, and
//! reports the most common one.
//!
//! Two single-start solvers are provided:
//!
//! * [`zec_single`] follows the dynamical system `dx/dt = Λ(T[x]) - x`
//!   with explicit Euler steps, where `Λ(A)` is the unit Perron vector of
//!   the nonnegative matrix `A`. Fixed points satisfy `T[x] x = μ x`, and
//!   the flow can settle on unstable eigenpairs.
//! * [`sshopm`], the shifted symmetric higher-order power method
//!   `x ← normalize₂(T x^{m-1} + α x)`. From generic starts it only
//!   converges to stable eigenpairs. A start that is exactly invariant under
//!   a symmetry of the hypergraph stays in that symmetric subspace, where an
//!   unstable pair can still attract.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::centrality::{check_start, require_connected, CentralityResult};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::linalg::{dist2, dot, norm2, normalize_one_norm, normalize_two_norm, project_out, symmetric_eigenvalues};
use crate::scalar::Scalar;
use crate::tensor::{apply, PairPattern, SparseSymmetricMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZecAlgorithm {
    DynamicalSystems,
    Sshopm,
}

/// Definiteness of `Uᵀ((m-1) T[x] - λ I) U` on the complement of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stability {
    PositiveStable,
    NegativeStable,
    Unstable,
    Degenerate,
}

impl Stability {
    pub fn as_str(self) -> &'static str {
        match self {
            Stability::PositiveStable => "positive-stable",
            Stability::NegativeStable => "negative-stable",
            Stability::Unstable => "unstable",
            Stability::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ZecOptions<T = f64> {
    pub algorithm: ZecAlgorithm,
    /// SS-HOPM shift. Any shift above a convexity bound makes the iteration
    /// monotone; larger shifts converge more slowly.
    pub alpha: T,
    /// Euler step of the dynamical system, in `(0, 1]`.
    pub step: T,
    /// Bound on both the successive-iterate change and the eigen-residual.
    pub tol: T,
    pub max_iters: usize,
    pub restarts: usize,
    pub seed: u64,
    /// Converged vectors closer than this (2-norm) share a cluster.
    pub cluster_tol: T,
    /// Tolerance of the inner Perron-vector power iteration.
    pub inner_tol: T,
    pub inner_max_iters: usize,
    /// Eigenvalues of the projected matrix within this of zero count as zero.
    pub stability_tol: T,
    /// Stability is classified only up to this many nodes (dense `O(n³)` step).
    pub classify_max_n: usize,
}

impl<T: Scalar> Default for ZecOptions<T> {
    fn default() -> Self {
        Self {
            algorithm: ZecAlgorithm::DynamicalSystems,
            alpha: T::one(),
            step: T::of(0.5),
            tol: T::of(1e-8),
            max_iters: 10_000,
            restarts: 100,
            seed: 0,
            cluster_tol: T::of(1e-4),
            inner_tol: T::of(1e-12),
            inner_max_iters: 100_000,
            stability_tol: T::of(1e-8),
            classify_max_n: 500,
        }
    }
}

impl<T: Scalar> ZecOptions<T> {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidArgument(msg.into()));
        if !(self.step > T::zero() && self.step <= T::one()) {
            return bad("step must lie in (0, 1]");
        }
        if self.restarts == 0 {
            return bad("restarts must be at least 1");
        }
        if !(self.tol > T::zero() && self.cluster_tol > T::zero() && self.inner_tol > T::zero()) {
            return bad("tolerances must be positive");
        }
        if !(self.alpha >= T::zero()) {
            return bad("alpha must be nonnegative");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZEigenpair<T = f64> {
    /// Unit 2-norm, nonnegative.
    pub vector: Vec<T>,
    /// Eigenvalue under the 2-norm normalization.
    pub eigenvalue: T,
    /// `‖T x^{m-1} - λ x‖₂`
    pub residual: T,
    pub iterations: usize,
    /// `None` when classification was skipped (see [`ZecOptions::classify_max_n`]).
    pub stability: Option<Stability>,
}

/// Distinct eigenpairs found across restarts.
#[derive(Debug, Clone)]
pub struct ZecEnsemble<T = f64> {
    /// Cluster representatives (smallest residual), in order of first discovery.
    pub pairs: Vec<ZEigenpair<T>>,
    pub counts: Vec<usize>,
    /// Index of the most common cluster; ties go to the earliest.
    pub chosen: usize,
    pub restarts: usize,
    /// Converged but rejected for entries at or below the positivity floor.
    pub rejected_nonpositive: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClusterReport {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    pub residual: f64,
    pub stability: Option<Stability>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnsembleReport {
    pub chosen: usize,
    pub restarts: usize,
    pub accepted: usize,
    pub rejected_nonpositive: usize,
    pub failed: usize,
    pub clusters: Vec<ClusterReport>,
}

impl<T: Scalar> ZecEnsemble<T> {
    pub fn accepted(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn report(&self) -> EnsembleReport {
        EnsembleReport {
            chosen: self.chosen,
            restarts: self.restarts,
            accepted: self.accepted(),
            rejected_nonpositive: self.rejected_nonpositive,
            failed: self.failed,
            clusters: self
                .pairs
                .iter()
                .zip(&self.counts)
                .map(|(p, &c)| ClusterReport {
                    eigenvalue: p.eigenvalue.as_f64(),
                    multiplicity: c,
                    residual: p.residual.as_f64(),
                    stability: p.stability,
                })
                .collect(),
        }
    }
}

/// `‖T x^{m-1} - λ x‖₂`
pub fn z_residual<T: Scalar>(h: &UniformHypergraph<T>, x: &[T], lambda: T) -> Result<T> {
    let y = apply(h, x)?;
    Ok(y.iter().zip(x).map(|(&a, &b)| (a - lambda * b) * (a - lambda * b)).sum::<T>().sqrt())
}

/// Eigenvalue and residual of a unit vector: `λ = xᵀ T x^{m-1}`.
fn rayleigh<T: Scalar>(h: &UniformHypergraph<T>, x: &[T]) -> Result<(T, T)> {
    let y = apply(h, x)?;
    let lambda = dot(x, &y);
    let residual = y.iter().zip(x).map(|(&a, &b)| (a - lambda * b) * (a - lambda * b)).sum::<T>().sqrt();
    Ok((lambda, residual))
}

/// Unit Perron vector of a nonnegative irreducible matrix by shifted power
/// iteration from `v` (overwritten with the result).
fn perron_vector<T: Scalar>(
    a: &SparseSymmetricMatrix<T>,
    v: &mut Vec<T>,
    tol: T,
    max_iters: usize,
) -> Result<()> {
    let mut y = vec![T::zero(); v.len()];
    a.mul_vec_into(v, &mut y);
    // half the Rayleigh quotient damps the negative end of the spectrum
    let shift = dot(v, &y) / (T::of(2.0) * dot(v, v));
    for it in 0..max_iters {
        if it > 0 {
            a.mul_vec_into(v, &mut y);
        }
        y.iter_mut().zip(v.iter()).for_each(|(yi, &vi)| *yi = *yi + shift * vi);
        let s = norm2(&y);
        if !(s > T::zero()) {
            return Err(Error::Internal("Perron iteration collapsed to zero".into()));
        }
        y.iter_mut().for_each(|yi| *yi = *yi / s);
        let change = dist2(&y, v);
        std::mem::swap(v, &mut y);
        if change <= tol {
            return Ok(());
        }
    }
    Err(Error::Internal(format!("Perron vector did not converge in {max_iters} iterations")))
}

fn check_unit<T: Scalar>(x: &[T]) -> Result<()> {
    if (norm2(x) - T::one()).abs() > T::of(1e-8) {
        return Err(Error::InvalidArgument("eigenpair vector must have unit 2-norm".into()));
    }
    Ok(())
}

fn maybe_classify<T: Scalar>(
    h: &UniformHypergraph<T>,
    pair: &mut ZEigenpair<T>,
    opts: &ZecOptions<T>,
) -> Result<()> {
    if h.node_count() >= 2 && h.node_count() <= opts.classify_max_n {
        pair.stability = Some(classify_stability(h, pair, opts.stability_tol)?);
    }
    Ok(())
}

fn dynamical_systems<T: Scalar>(h: &UniformHypergraph<T>, x0: &[T], opts: &ZecOptions<T>) -> Result<ZEigenpair<T>> {
    let pattern = PairPattern::new(h);
    let mut x = normalize_two_norm(x0)?;
    let mut tx = pattern.contracted(h, &x);
    let mut perron = x.clone();
    let mut change = T::infinity();
    for it in 1..=opts.max_iters {
        pattern.contract_into(h, &x, &mut tx);
        // warm start; a zero entry would stay zero under reducible T[x]
        perron.iter_mut().zip(&x).for_each(|(p, &xi)| *p = p.max(xi).max(T::min_positive_value()));
        perron_vector(&tx, &mut perron, opts.inner_tol, opts.inner_max_iters)?;
        let next: Vec<T> = x.iter().zip(&perron).map(|(&xi, &pi)| xi + opts.step * (pi - xi)).collect();
        let next = normalize_two_norm(&next)?;
        change = dist2(&next, &x);
        x = next;
        if change <= opts.tol {
            let (eigenvalue, residual) = rayleigh(h, &x)?;
            if residual <= opts.tol {
                return Ok(ZEigenpair { vector: x, eigenvalue, residual, iterations: it, stability: None });
            }
        }
    }
    Err(Error::NotConverged { iterations: opts.max_iters, last_change: change.as_f64() })
}

fn shifted_power<T: Scalar>(h: &UniformHypergraph<T>, x0: &[T], alpha: T, opts: &ZecOptions<T>) -> Result<ZEigenpair<T>> {
    let mut x = normalize_two_norm(x0)?;
    let mut change = T::infinity();
    for it in 1..=opts.max_iters {
        let y = apply(h, &x)?;
        let next: Vec<T> = y.iter().zip(&x).map(|(&yi, &xi)| yi + alpha * xi).collect();
        let next = normalize_two_norm(&next)?;
        change = dist2(&next, &x);
        x = next;
        if change <= opts.tol {
            let (eigenvalue, residual) = rayleigh(h, &x)?;
            if residual <= opts.tol {
                return Ok(ZEigenpair { vector: x, eigenvalue, residual, iterations: it, stability: None });
            }
        }
    }
    Err(Error::NotConverged { iterations: opts.max_iters, last_change: change.as_f64() })
}

/// One dynamical-systems solve from `x0`, with stability classification.
pub fn zec_single<T: Scalar>(h: &UniformHypergraph<T>, x0: &[T], opts: &ZecOptions<T>) -> Result<ZEigenpair<T>> {
    opts.validate()?;
    require_connected(h)?;
    check_start(h.node_count(), x0)?;
    let mut pair = dynamical_systems(h, x0, opts)?;
    maybe_classify(h, &mut pair, opts)?;
    Ok(pair)
}

/// One SS-HOPM solve from `x0` with shift `alpha`. Does not reach unstable
/// pairs from generic starts.
pub fn sshopm<T: Scalar>(
    h: &UniformHypergraph<T>,
    x0: &[T],
    alpha: T,
    opts: &ZecOptions<T>,
) -> Result<ZEigenpair<T>> {
    opts.validate()?;
    if !(alpha >= T::zero()) {
        return Err(Error::InvalidArgument("alpha must be nonnegative".into()));
    }
    require_connected(h)?;
    check_start(h.node_count(), x0)?;
    let mut pair = shifted_power(h, x0, alpha, opts)?;
    maybe_classify(h, &mut pair, opts)?;
    Ok(pair)
}

/// Labels a unit-norm eigenpair by the spectrum of `Uᵀ((m-1) T[x] - λ I) U`.
///
/// Mixed signs beyond `tol` mean unstable; otherwise any eigenvalue within
/// `tol` of zero means degenerate.
pub fn classify_stability<T: Scalar>(h: &UniformHypergraph<T>, pair: &ZEigenpair<T>, tol: T) -> Result<Stability> {
    let n = h.node_count();
    if n < 2 {
        return Err(Error::InvalidArgument("stability needs at least two nodes".into()));
    }
    if pair.vector.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: pair.vector.len() });
    }
    check_unit(&pair.vector)?;
    if h.uniformity() < 3 {
        return Err(Error::InvalidUniformity { m: h.uniformity(), min: 3 });
    }
    let scale = T::of_usize(h.uniformity() - 1);
    let mut a = PairPattern::new(h).contracted(h, &pair.vector).to_dense();
    for (i, row) in a.iter_mut().enumerate() {
        row.iter_mut().for_each(|v| *v = *v * scale);
        row[i] = row[i] - pair.eigenvalue;
    }
    let eig = symmetric_eigenvalues(&project_out(&a, &pair.vector));
    let has_pos = eig.iter().any(|&e| e > tol);
    let has_neg = eig.iter().any(|&e| e < -tol);
    Ok(match (has_pos, has_neg) {
        (true, true) => Stability::Unstable,
        _ if eig.iter().any(|&e| e.abs() <= tol) => Stability::Degenerate,
        (true, false) => Stability::PositiveStable,
        (false, _) => Stability::NegativeStable,
    })
}

/// Seeded random starts: i.i.d. uniform(0,1) entries, 2-norm normalized.
pub fn random_starts<T: Scalar>(n: usize, count: usize, seed: u64) -> Vec<Vec<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v: Vec<T> = (0..n).map(|_| T::of(rng.gen::<f64>())).collect();
            normalize_two_norm(&v).unwrap_or_else(|_| vec![T::one() / T::of_usize(n).sqrt(); n])
        })
        .collect()
}

/// Multi-restart ZEC. Returns the modal cluster's vector rescaled to unit
/// 1-norm (eigenvalue still under 2-norm normalization) and the ensemble.
pub fn zec<T: Scalar>(h: &UniformHypergraph<T>, opts: &ZecOptions<T>) -> Result<(CentralityResult<T>, ZecEnsemble<T>)> {
    opts.validate()?;
    require_connected(h)?;
    let n = h.node_count();
    let starts = random_starts::<T>(n, opts.restarts, opts.seed);
    let solves: Vec<Result<ZEigenpair<T>>> = starts
        .par_iter()
        .map(|x0| match opts.algorithm {
            ZecAlgorithm::DynamicalSystems => dynamical_systems(h, x0, opts),
            ZecAlgorithm::Sshopm => shifted_power(h, x0, opts.alpha, opts),
        })
        .collect();

    let floor = T::of(1e-12) / T::of_usize(n);
    let mut pairs: Vec<ZEigenpair<T>> = Vec::new();
    let mut anchors: Vec<Vec<T>> = Vec::new();
    let mut counts = Vec::new();
    let (mut rejected_nonpositive, mut failed) = (0, 0);
    for solve in solves {
        let Ok(pair) = solve else {
            failed += 1;
            continue;
        };
        if pair.vector.iter().any(|&v| v <= floor) {
            rejected_nonpositive += 1;
            continue;
        }
        match anchors.iter().position(|a| dist2(a, &pair.vector) < opts.cluster_tol) {
            Some(c) => {
                counts[c] += 1;
                if pair.residual < pairs[c].residual {
                    pairs[c] = pair;
                }
            }
            None => {
                anchors.push(pair.vector.clone());
                pairs.push(pair);
                counts.push(1);
            }
        }
    }
    if pairs.is_empty() {
        return Err(Error::NoConvergedRestarts { restarts: opts.restarts, rejected_nonpositive, failed });
    }
    for pair in &mut pairs {
        maybe_classify(h, pair, opts)?;
    }
    let chosen = counts
        .iter()
        .enumerate()
        .fold(0, |best, (i, &c)| if c > counts[best] { i } else { best });
    let rep = &pairs[chosen];
    let centrality = CentralityResult {
        scores: normalize_one_norm(&rep.vector)?,
        eigenvalue: rep.eigenvalue,
        residual: rep.residual,
        iterations: rep.iterations,
        converged: true,
    };
    let ensemble = ZecEnsemble { pairs, counts, chosen, restarts: opts.restarts, rejected_nonpositive, failed };
    Ok((centrality, ensemble))
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = UniformHypergraph<f64>;

    fn single_edge() -> H {
        H::from_edges(3, 3, &[&[0, 1, 2]])
    }

    #[test]
    fn single_edge_pair() {
        let h = single_edge();
        let opts = ZecOptions::default();
        let p = zec_single(&h, &[0.2, 0.5, 0.9], &opts).unwrap();
        let u = 1.0 / 3f64.sqrt();
        assert!(p.vector.iter().all(|v| (v - u).abs() < 1e-8));
        assert!((p.eigenvalue - 2.0 / 3f64.sqrt()).abs() < 1e-8);
        assert_ne!(p.stability, Some(Stability::Unstable));

        let q = sshopm(&h, &[0.2, 0.5, 0.9], 1.0, &opts).unwrap();
        assert!(dist2(&p.vector, &q.vector) < 1e-7);
    }

    #[test]
    fn single_edge_is_negative_stable() {
        // (m-1)T[x] - λI = (2/√3)(J - 2I), which is -4/√3 on x⊥
        let h = single_edge();
        let u = 1.0 / 3f64.sqrt();
        let pair = ZEigenpair {
            vector: vec![u; 3],
            eigenvalue: 2.0 * u,
            residual: 0.0,
            iterations: 0,
            stability: None,
        };
        assert_eq!(classify_stability(&h, &pair, 1e-10).unwrap(), Stability::NegativeStable);
    }

    #[test]
    fn classify_rejects_bad_vectors() {
        let h = single_edge();
        let pair = ZEigenpair { vector: vec![1.0; 3], eigenvalue: 1.0, residual: 0.0, iterations: 0, stability: None };
        assert!(classify_stability(&h, &pair, 1e-10).is_err());
        let tiny = H::from_edges(3, 3, &[&[0, 1, 2]]);
        let short = ZEigenpair { vector: vec![1.0], ..pair };
        assert!(classify_stability(&tiny, &short, 1e-10).is_err());
    }

    #[test]
    fn options_are_validated() {
        let h = single_edge();
        let x0 = [1.0, 1.0, 1.0];
        for opts in [
            ZecOptions { step: 0.0, ..ZecOptions::default() },
            ZecOptions { step: 1.5, ..ZecOptions::default() },
            ZecOptions { restarts: 0, ..ZecOptions::default() },
            ZecOptions { tol: 0.0, ..ZecOptions::default() },
        ] {
            assert!(matches!(zec_single(&h, &x0, &opts), Err(Error::InvalidArgument(_))));
        }
        assert!(sshopm(&h, &x0, -1.0, &ZecOptions::default()).is_err());
    }

    #[test]
    fn non_convergence_is_an_error() {
        let h = H::from_edges(3, 5, &[&[0, 1, 2], &[0, 3, 4]]);
        let opts = ZecOptions { max_iters: 2, ..ZecOptions::default() };
        assert!(matches!(
            zec_single(&h, &[0.1, 0.9, 0.3, 0.2, 0.5], &opts),
            Err(Error::NotConverged { iterations: 2, .. })
        ));
    }

    #[test]
    fn random_starts_are_seeded_unit_vectors() {
        let a = random_starts::<f64>(5, 3, 7);
        assert_eq!(a, random_starts::<f64>(5, 3, 7));
        assert_ne!(a, random_starts::<f64>(5, 3, 8));
        assert!(a.iter().all(|v| (norm2(v) - 1.0).abs() < 1e-15 && v.iter().all(|&x| x >= 0.0)));
    }

    #[test]
    fn ensemble_on_single_edge() {
        let h = single_edge();
        let opts = ZecOptions { restarts: 8, ..ZecOptions::default() };
        let (c, e) = zec(&h, &opts).unwrap();
        assert_eq!(e.counts, vec![8]);
        assert!(c.scores.iter().all(|s| (s - 1.0 / 3.0).abs() < 1e-8));
        let report = e.report();
        assert_eq!(report.clusters[0].multiplicity, 8);
        assert_eq!(report.accepted, 8);
    }
}
