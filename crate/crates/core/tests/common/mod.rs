#![allow(dead_code)]

use hyperc::analytic::random_connected;
use hyperc::Hypergraph;
use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_hypergraph(seed: u64, m: usize, n: usize, extra: usize) -> Hypergraph {
    random_connected(m, n, extra, &mut rng(seed)).unwrap()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Fully materialized tensor, row-major over `n^m` indices.
pub struct DenseTensor {
    pub m: usize,
    pub n: usize,
    pub data: Vec<f64>,
}

impl DenseTensor {
    pub fn of(h: &Hypergraph) -> Self {
        let (m, n) = (h.uniformity(), h.node_count());
        let mut data = vec![0.0; n.pow(m as u32)];
        for (k, e) in h.edges().enumerate() {
            for p in permutations(e) {
                data[p.iter().fold(0, |acc, &v| acc * n + v)] += h.weight(k);
            }
        }
        DenseTensor { m, n, data }
    }

    fn index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.m];
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.n;
            flat /= self.n;
        }
        idx
    }

    /// Naive `T x^{m-1}` over every entry.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        for (flat, &t) in self.data.iter().enumerate() {
            if t == 0.0 {
                continue;
            }
            let idx = self.index(flat);
            y[idx[0]] += t * idx[1..].iter().map(|&v| x[v]).product::<f64>();
        }
        y
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    /// `‖T - λ x^{⊗m}‖_F²` without forming the rank-1 tensor.
    pub fn rank_one_error_sq(&self, lambda: f64, x: &[f64]) -> f64 {
        self.data
            .iter()
            .enumerate()
            .map(|(flat, &t)| {
                let r = t - lambda * self.index(flat).iter().map(|&v| x[v]).product::<f64>();
                r * r
            })
            .sum()
    }
}

/// Dense `W` from its pair definition, independent of the library.
pub fn dense_motif(h: &Hypergraph) -> DMatrix<f64> {
    let n = h.node_count();
    let mut w = DMatrix::zeros(n, n);
    for (k, e) in h.edges().enumerate() {
        for &u in e {
            for &v in e {
                if u != v {
                    w[(u, v)] += h.weight(k);
                }
            }
        }
    }
    w
}

/// Perron vector of a nonnegative symmetric matrix, 1-norm normalized.
pub fn dense_perron(w: &DMatrix<f64>) -> (Vec<f64>, f64) {
    let eig = SymmetricEigen::new(w.clone());
    let top = eig.eigenvalues.imax();
    let v = eig.eigenvectors.column(top);
    let s: f64 = v.iter().sum();
    (v.iter().map(|x| x / s).collect(), eig.eigenvalues[top])
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn one_norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).sum()
}

/// Maximizes `|⟨T, x^{⊗3}⟩|` over the unit sphere in R⁴ by a hyperspherical
/// angle grid followed by shrinking local grids. Minimizing `‖T - λ x^{⊗3}‖_F`
/// over `λ` gives `λ = ⟨T, x^{⊗3}⟩`, so this is the best rank-1 approximation.
pub fn rank_one_by_grid(t: &DenseTensor) -> (Vec<f64>, f64) {
    let point = |a: [f64; 3]| {
        let (s0, c0) = a[0].sin_cos();
        let (s1, c1) = a[1].sin_cos();
        let (s2, c2) = a[2].sin_cos();
        vec![c0, s0 * c1, s0 * s1 * c2, s0 * s1 * s2]
    };
    let score = |x: &[f64]| {
        let y = t.apply(x);
        x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>()
    };
    let pi = std::f64::consts::PI;
    let g = 36;
    let mut best = ([0.0; 3], f64::MIN);
    for i in 0..=g {
        for j in 0..=g {
            for k in 0..2 * g {
                let a = [pi * i as f64 / g as f64, pi * j as f64 / g as f64, pi * k as f64 / g as f64];
                let s = score(&point(a)).abs();
                if s > best.1 {
                    best = (a, s);
                }
            }
        }
    }
    let mut step = pi / g as f64;
    while step > 1e-10 {
        let mut moved = false;
        for d in 0..27 {
            let off = [(d % 3) as f64 - 1.0, ((d / 3) % 3) as f64 - 1.0, (d / 9) as f64 - 1.0];
            let a = [best.0[0] + off[0] * step, best.0[1] + off[1] * step, best.0[2] + off[2] * step];
            let s = score(&point(a)).abs();
            if s > best.1 {
                best = (a, s);
                moved = true;
            }
        }
        if !moved {
            step /= 2.0;
        }
    }
    let mut x = point(best.0);
    let mut lambda = score(&x);
    if lambda < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
        lambda = -lambda;
    }
    (x, lambda)
}

/// Rank-then-Pearson with ranks from pairwise counting.
pub fn naive_spearman(x: &[f64], y: &[f64]) -> f64 {
    let rank = |v: &[f64]| -> Vec<f64> {
        v.iter()
            .map(|&a| {
                let below = v.iter().filter(|&&b| b < a).count() as f64;
                let equal = v.iter().filter(|&&b| b == a).count() as f64;
                below + (equal + 1.0) / 2.0
            })
            .collect()
    };
    let (rx, ry) = (rank(x), rank(y));
    let n = x.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

pub fn tied_vector(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    let pool: Vec<f64> = (0..rng.gen_range(2..=n)).map(|_| rng.gen_range(-5.0..5.0)).collect();
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect();
    for x in v.iter_mut() {
        if rng.gen_bool(0.3) {
            *x = pool[rng.gen_range(0..pool.len())];
        }
    }
    v
}
