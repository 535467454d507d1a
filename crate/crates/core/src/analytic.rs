//! Hypergraphs with known centralities.
//!
//! A sunflower with singleton core has `r` edges that pairwise meet only in
//! the core node. Its centralities have closed forms for the core-to-petal
//! score ratio:
//!
//! | method | ratio                                           | r fixed, m → ∞ |
//! |--------|-------------------------------------------------|----------------|
//! | CEC    | `2r(m-1) / (√(m² + 4(m-1)(r-1)) + m - 2)`       | `r`            |
//! | ZEC    | `√r` (unique for `m ≠ 3`)                       | `√r`           |
//! | HEC    | `r^{1/m}`                                       | `1`            |
//!
//! For `m = 3` the positive Z-eigenvectors form a family: any positive petal
//! constants `c_P` with core `√(Σ c_P²)` (see [`sunflower_zec_family`]).

use rand::seq::SliceRandom;
use rand::Rng;

use crate::centrality::Method;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::linalg::{norm_inf, normalize_one_norm};
use crate::scalar::{factorial, Scalar};
use crate::tensor::apply;
use crate::zec::ZEigenpair;

/// Sunflower parameters: uniformity `m >= 3`, petal count `r >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SunflowerSpec {
    pub m: usize,
    pub r: usize,
}

impl SunflowerSpec {
    pub fn new(m: usize, r: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidUniformity { m, min: 3 });
        }
        if r < 1 {
            return Err(Error::InvalidArgument("a sunflower needs at least one petal".into()));
        }
        Ok(Self { m, r })
    }

    pub fn node_count(&self) -> usize {
        1 + self.r * (self.m - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.r
    }

    /// Non-core nodes of petal `p`.
    pub fn petal(&self, p: usize) -> std::ops::Range<usize> {
        1 + p * (self.m - 1)..1 + (p + 1) * (self.m - 1)
    }

    pub fn hypergraph<T: Scalar>(&self) -> UniformHypergraph<T> {
        let edges = (0..self.r)
            .map(|p| std::iter::once(0).chain(self.petal(p)).collect())
            .collect();
        UniformHypergraph::new(self.m, self.node_count(), edges, None).expect("sunflowers are valid")
    }

    pub fn ratio(&self, method: Method) -> Result<f64> {
        sunflower_ratio(method, self.m, self.r)
    }
}

/// Sunflower with core node 0; petal `p` holds nodes `1+p(m-1) ..= (p+1)(m-1)`.
pub fn sunflower<T: Scalar>(m: usize, r: usize) -> Result<UniformHypergraph<T>> {
    Ok(SunflowerSpec::new(m, r)?.hypergraph())
}

/// Closed-form core-to-petal centrality ratio.
pub fn sunflower_ratio(method: Method, m: usize, r: usize) -> Result<f64> {
    SunflowerSpec::new(m, r)?;
    let (mf, rf) = (m as f64, r as f64);
    match method {
        Method::Cec => {
            Ok(2.0 * rf * (mf - 1.0) / ((mf * mf + 4.0 * (mf - 1.0) * (rf - 1.0)).sqrt() + mf - 2.0))
        }
        Method::Zec if m == 3 => Err(Error::InvalidArgument(
            "ZEC on 3-uniform sunflowers is not unique; use sunflower_zec_family".into(),
        )),
        Method::Zec => Ok(rf.sqrt()),
        Method::Hec => Ok(rf.powf(1.0 / mf)),
    }
}

/// A member of the m = 3 sunflower Z-eigenvector family.
#[derive(Debug, Clone)]
pub struct FamilyMember<T = f64> {
    pub hypergraph: UniformHypergraph<T>,
    /// 1-norm normalized.
    pub vector: Vec<T>,
    /// Eigenvalue matching `vector`'s scale: `2 c_core`.
    pub eigenvalue: T,
}

/// Builds the Z-eigenvector of the 3-uniform sunflower with one petal per
/// entry of `petal_constants`: petal nodes get `c_P`, the core
/// `√(Σ c_P²)`, then everything is rescaled to unit 1-norm.
pub fn sunflower_zec_family<T: Scalar>(petal_constants: &[T]) -> Result<FamilyMember<T>> {
    if petal_constants.iter().any(|&c| !(c > T::zero())) {
        return Err(Error::InvalidArgument("petal constants must be positive".into()));
    }
    let spec = SunflowerSpec::new(3, petal_constants.len())?;
    let mut x = vec![T::zero(); spec.node_count()];
    x[0] = petal_constants.iter().map(|&c| c * c).sum::<T>().sqrt();
    for (p, &c) in petal_constants.iter().enumerate() {
        for v in spec.petal(p) {
            x[v] = c;
        }
    }
    let vector = normalize_one_norm(&x)?;
    let eigenvalue = factorial::<T>(2) * vector[0];
    Ok(FamilyMember { hypergraph: spec.hypergraph(), vector, eigenvalue })
}

/// Seven-node 3-uniform hypergraph with a positive but unstable Z-eigenpair
/// `(x, √2)`: `x = (a, a, c, b, a, a, b)`, `a = √6/6`, `b = √2/6`, `c = √2/3`.
///
/// Edges (0-based) `{0,1,2} {0,1,3} {2,4,5} {4,5,6}`: two triangles
/// sharing node 2, each with a pendant edge.
pub fn example_unstable_fixture<T: Scalar>() -> (UniformHypergraph<T>, ZEigenpair<T>) {
    let h = UniformHypergraph::from_edges(3, 7, &[&[0, 1, 2], &[0, 1, 3], &[2, 4, 5], &[4, 5, 6]]);
    let a = T::of(6.0).sqrt() / T::of(6.0);
    let b = T::of(2.0).sqrt() / T::of(6.0);
    let c = T::of(2.0).sqrt() / T::of(3.0);
    let x = vec![a, a, c, b, a, a, b];
    let lambda = T::of(2.0).sqrt();
    let y = apply(&h, &x).expect("fixture dimensions");
    let err: Vec<T> = y.iter().zip(&x).map(|(&yi, &xi)| yi - lambda * xi).collect();
    assert!(norm_inf(&err) <= T::of(1e-12).max(T::epsilon() * T::of(8.0)), "fixture is not an eigenpair");
    let pair = ZEigenpair { vector: x, eigenvalue: lambda, residual: T::zero(), iterations: 0, stability: None };
    (h, pair)
}

/// Random connected m-uniform hypergraph on `n >= m` nodes.
///
/// A spanning chain of edges (each sharing at least one node with the
/// previous ones) guarantees connectivity; `extra_edges` further random
/// m-subsets are then added, skipping duplicates.
pub fn random_connected<T: Scalar, R: Rng + ?Sized>(
    m: usize,
    n: usize,
    extra_edges: usize,
    rng: &mut R,
) -> Result<UniformHypergraph<T>> {
    if m < 2 {
        return Err(Error::InvalidUniformity { m, min: 2 });
    }
    if n < m {
        return Err(Error::InvalidArgument(format!("need n >= m, got n = {n}, m = {m}")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<Vec<usize>> = vec![order[..m].to_vec()];
    let mut covered = m;
    while covered < n {
        let fresh = rng.gen_range(1..m).min(n - covered);
        let mut e: Vec<usize> = order[covered..covered + fresh].to_vec();
        while e.len() < m {
            let v = order[rng.gen_range(0..covered)];
            if !e.contains(&v) {
                e.push(v);
            }
        }
        covered += fresh;
        edges.push(e);
    }
    let mut seen: std::collections::HashSet<Vec<usize>> = edges
        .iter_mut()
        .map(|e| {
            e.sort_unstable();
            e.clone()
        })
        .collect();
    for _ in 0..extra_edges {
        let mut e: Vec<usize> = rand::seq::index::sample(rng, n, m).into_vec();
        e.sort_unstable();
        if seen.insert(e.clone()) {
            edges.push(e);
        }
    }
    UniformHypergraph::new(m, n, edges, None)
}
