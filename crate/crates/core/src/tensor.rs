//! Kernels over the implicit symmetric adjacency tensor.
//!
//! Every edge `e` with weight `w` contributes `w` at each of the `m!`
//! permutations of its nodes, so
//!
//! * `[T x^{m-1}]_i = (m-1)! Σ_{e ∋ i} w_e Π_{v ∈ e∖i} x_v`
//! * `T[x]_{ij} = (m-2)! Σ_{e ⊇ {i,j}} w_e Π_{v ∈ e∖{i,j}} x_v`
//!
//! and `T[x] x = T x^{m-1}`.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::scalar::{factorial, Scalar};

static DETERMINISTIC: AtomicBool = AtomicBool::new(false);

/// Edge count above which [`apply`] splits the edge list across threads.
const PARALLEL_EDGES: usize = 50_000;
/// Chunk count used for parallel accumulation in deterministic mode.
const DETERMINISTIC_CHUNKS: usize = 64;
/// Below this magnitude leave-one-out products avoid dividing.
const DIVISION_FLOOR: f64 = 1e-30;

/// Makes parallel reductions independent of the thread count.
pub fn set_deterministic(on: bool) {
    DETERMINISTIC.store(on, Ordering::SeqCst);
}

pub fn is_deterministic() -> bool {
    DETERMINISTIC.load(Ordering::SeqCst)
}

fn check_len<T>(h_n: usize, x: &[T]) -> Result<()> {
    if x.len() == h_n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: h_n, actual: x.len() })
    }
}

/// Adds `scale · Π_{v ∈ e∖i} x_v` into `y[i]` for each node `i` of `e`.
#[inline]
fn accumulate_edge<T: Scalar>(e: &[usize], scale: T, x: &[T], y: &mut [T]) {
    let floor = T::of(DIVISION_FLOOR);
    if e.iter().all(|&v| x[v].abs() > floor) {
        let prod = e.iter().fold(T::one(), |p, &v| p * x[v]);
        for &i in e {
            y[i] = y[i] + scale * prod / x[i];
        }
    } else {
        // prefix products left to right, then sweep suffixes back
        let m = e.len();
        let mut prefix = T::one();
        let mut left = [T::zero(); 32];
        let mut heap;
        let left: &mut [T] = if m <= 32 {
            &mut left[..m]
        } else {
            heap = vec![T::zero(); m];
            &mut heap
        };
        for (k, &v) in e.iter().enumerate() {
            left[k] = prefix;
            prefix = prefix * x[v];
        }
        let mut suffix = T::one();
        for (k, &v) in e.iter().enumerate().rev() {
            y[v] = y[v] + scale * left[k] * suffix;
            suffix = suffix * x[v];
        }
    }
}

fn apply_range<T: Scalar>(h: &UniformHypergraph<T>, range: std::ops::Range<usize>, x: &[T], y: &mut [T]) {
    let sym = factorial::<T>(h.uniformity() - 1);
    for k in range {
        accumulate_edge(h.edge(k), sym * h.weight(k), x, y);
    }
}

/// `T x^{m-1}`, including the `(m-1)!` symmetry factor. Cost `O(|E| m)`.
pub fn apply<T: Scalar>(h: &UniformHypergraph<T>, x: &[T]) -> Result<Vec<T>> {
    check_len(h.node_count(), x)?;
    let n = h.node_count();
    let edges = h.edge_count();
    if edges < PARALLEL_EDGES {
        let mut y = vec![T::zero(); n];
        apply_range(h, 0..edges, x, &mut y);
        return Ok(y);
    }
    let chunks = if is_deterministic() {
        DETERMINISTIC_CHUNKS
    } else {
        rayon::current_num_threads().max(1)
    };
    let size = edges.div_ceil(chunks);
    let partials: Vec<Vec<T>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut y = vec![T::zero(); n];
            apply_range(h, (c * size).min(edges)..((c + 1) * size).min(edges), x, &mut y);
            y
        })
        .collect();
    let mut y = vec![T::zero(); n];
    for part in partials {
        for (a, b) in y.iter_mut().zip(part) {
            *a = *a + b;
        }
    }
    Ok(y)
}

/// Symmetric sparse matrix storing each off-diagonal entry once (`i <= j`),
/// in row-compressed form.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseSymmetricMatrix<T = f64> {
    dim: usize,
    row_start: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<T>,
}

impl<T: Scalar> SparseSymmetricMatrix<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Stored entries (upper triangle).
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// `(i, j, value)` with `i <= j`, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        (0..self.dim).flat_map(move |i| {
            (self.row_start[i]..self.row_start[i + 1]).map(move |k| (i, self.cols[k], self.values[k]))
        })
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let row = &self.cols[self.row_start[i]..self.row_start[i + 1]];
        match row.binary_search(&j) {
            Ok(k) => self.values[self.row_start[i] + k],
            Err(_) => T::zero(),
        }
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        check_len(self.dim, x)?;
        let mut y = vec![T::zero(); self.dim];
        self.mul_vec_into(x, &mut y);
        Ok(y)
    }

    /// `y = A x`; lengths must equal `dim`.
    pub fn mul_vec_into(&self, x: &[T], y: &mut [T]) {
        y.iter_mut().for_each(|v| *v = T::zero());
        for i in 0..self.dim {
            let mut acc = y[i];
            let xi = x[i];
            for k in self.row_start[i]..self.row_start[i + 1] {
                let j = self.cols[k];
                let a = self.values[k];
                acc = acc + a * x[j];
                if j != i {
                    y[j] = y[j] + a * xi;
                }
            }
            y[i] = acc;
        }
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.dim]; self.dim];
        for (i, j, v) in self.entries() {
            d[i][j] = v;
            d[j][i] = v;
        }
        d
    }

    pub fn row_sums(&self) -> Vec<T> {
        self.mul_vec(&vec![T::one(); self.dim]).expect("dimension matches")
    }

    fn drop_zeros(mut self) -> Self {
        let mut row_start = vec![0; self.dim + 1];
        let mut w = 0;
        for i in 0..self.dim {
            for k in self.row_start[i]..self.row_start[i + 1] {
                if self.values[k] != T::zero() {
                    self.cols[w] = self.cols[k];
                    self.values[w] = self.values[k];
                    w += 1;
                }
            }
            row_start[i + 1] = w;
        }
        self.cols.truncate(w);
        self.values.truncate(w);
        self.row_start = row_start;
        self
    }
}

/// Clique-expansion sparsity pattern of a hypergraph, with the storage slot
/// of every node pair of every edge precomputed. Lets `T[x]` be refilled in
/// `O(|E| m^2)` without reallocating.
#[derive(Debug, Clone)]
pub struct PairPattern {
    m: usize,
    dim: usize,
    row_start: Vec<usize>,
    cols: Vec<usize>,
    /// `C(m,2)` slots per edge, pairs in `(a, b)` lexicographic order.
    edge_slots: Vec<usize>,
}

impl PairPattern {
    pub fn new<T: Scalar>(h: &UniformHypergraph<T>) -> Self {
        let n = h.node_count();
        let m = h.uniformity();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in h.edges() {
            for a in 0..m {
                for b in a + 1..m {
                    rows[e[a]].push(e[b]);
                }
            }
        }
        let mut row_start = Vec::with_capacity(n + 1);
        let mut cols = Vec::new();
        row_start.push(0);
        for row in &mut rows {
            row.sort_unstable();
            row.dedup();
            cols.extend_from_slice(row);
            row_start.push(cols.len());
        }
        let mut edge_slots = Vec::with_capacity(h.edge_count() * m * (m - 1) / 2);
        for e in h.edges() {
            for a in 0..m {
                let row = &cols[row_start[e[a]]..row_start[e[a] + 1]];
                for b in a + 1..m {
                    let k = row.binary_search(&e[b]).expect("pair recorded above");
                    edge_slots.push(row_start[e[a]] + k);
                }
            }
        }
        Self { m, dim: n, row_start, cols, edge_slots }
    }

    fn matrix<T: Scalar>(&self) -> SparseSymmetricMatrix<T> {
        SparseSymmetricMatrix {
            dim: self.dim,
            row_start: self.row_start.clone(),
            cols: self.cols.clone(),
            values: vec![T::zero(); self.cols.len()],
        }
    }

    /// Fresh matrix with this pattern and `W`-style values (edge weight per pair).
    pub fn motif<T: Scalar>(&self, h: &UniformHypergraph<T>) -> SparseSymmetricMatrix<T> {
        let mut out = self.matrix();
        let pairs = self.m * (self.m - 1) / 2;
        for (k, slots) in self.edge_slots.chunks_exact(pairs).enumerate() {
            let w = h.weight(k);
            for &s in slots {
                out.values[s] = out.values[s] + w;
            }
        }
        out
    }

    /// Fresh matrix holding `T[x]` on this pattern (explicit zeros possible).
    pub fn contracted<T: Scalar>(&self, h: &UniformHypergraph<T>, x: &[T]) -> SparseSymmetricMatrix<T> {
        let mut out = self.matrix();
        self.contract_into(h, x, &mut out);
        out
    }

    /// Overwrites the values of `out` (built from this pattern) with `T[x]`.
    pub fn contract_into<T: Scalar>(&self, h: &UniformHypergraph<T>, x: &[T], out: &mut SparseSymmetricMatrix<T>) {
        let m = self.m;
        let pairs = m * (m - 1) / 2;
        let sym = factorial::<T>(m - 2);
        let floor = T::of(DIVISION_FLOOR);
        out.values.iter_mut().for_each(|v| *v = T::zero());
        for (k, (e, slots)) in h.edges().zip(self.edge_slots.chunks_exact(pairs)).enumerate() {
            let scale = sym * h.weight(k);
            let divisible = e.iter().all(|&v| x[v].abs() > floor);
            let prod = if divisible { e.iter().fold(T::one(), |p, &v| p * x[v]) } else { T::zero() };
            let mut s = 0;
            for a in 0..m {
                for b in a + 1..m {
                    let rest = if divisible {
                        prod / (x[e[a]] * x[e[b]])
                    } else {
                        (0..m)
                            .filter(|&c| c != a && c != b)
                            .fold(T::one(), |p, c| p * x[e[c]])
                    };
                    let slot = slots[s];
                    out.values[slot] = out.values[slot] + scale * rest;
                    s += 1;
                }
            }
        }
    }
}

/// `T[x]` (the tensor contracted with `x` in all but two modes).
pub fn contracted_matrix<T: Scalar>(h: &UniformHypergraph<T>, x: &[T]) -> Result<SparseSymmetricMatrix<T>> {
    if h.uniformity() < 3 {
        return Err(Error::InvalidUniformity { m: h.uniformity(), min: 3 });
    }
    check_len(h.node_count(), x)?;
    Ok(PairPattern::new(h).contracted(h, x).drop_zeros())
}

/// Clique-motif matrix `W`: `W_uv` is the total weight of edges containing
/// both `u` and `v`; zero diagonal.
pub fn motif_matrix<T: Scalar>(h: &UniformHypergraph<T>) -> SparseSymmetricMatrix<T> {
    PairPattern::new(h).motif(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = UniformHypergraph<f64>;

    #[test]
    fn single_edge_of_ones() {
        let h = H::from_edges(3, 3, &[&[0, 1, 2]]);
        assert_eq!(apply(&h, &[1.0, 1.0, 1.0]).unwrap(), vec![2.0, 2.0, 2.0]);
    }

    #[test]
    fn weighted_single_edge() {
        let h = H::new(3, 3, vec![vec![0, 1, 2]], Some(vec![0.5])).unwrap();
        assert_eq!(apply(&h, &[1.0, 2.0, 3.0]).unwrap(), vec![6.0, 3.0, 2.0]);
    }

    #[test]
    fn zero_entries_use_leave_one_out() {
        let h = H::from_edges(4, 4, &[&[0, 1, 2, 3]]);
        let y = apply(&h, &[0.0, 2.0, 3.0, 0.0]).unwrap();
        assert_eq!(y, vec![0.0, 0.0, 0.0, 0.0]);
        let y = apply(&h, &[0.0, 2.0, 3.0, 5.0]).unwrap();
        assert_eq!(y, vec![6.0 * 30.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn dimension_mismatch() {
        let h = H::from_edges(3, 3, &[&[0, 1, 2]]);
        assert!(matches!(apply(&h, &[1.0]), Err(Error::DimensionMismatch { .. })));
        assert!(contracted_matrix(&h, &[1.0]).is_err());
    }

    #[test]
    fn contracted_single_edge() {
        let h = H::from_edges(3, 3, &[&[0, 1, 2]]);
        let (a, b, c) = (2.0, 3.0, 5.0);
        let t = contracted_matrix(&h, &[a, b, c]).unwrap();
        assert_eq!(t.get(0, 1), c);
        assert_eq!(t.get(2, 0), b);
        assert_eq!(t.get(1, 2), a);
        assert_eq!(t.get(1, 1), 0.0);
        assert_eq!(t.nnz(), 3);
    }

    #[test]
    fn contracted_rejects_graphs() {
        let h = H::from_edges(2, 2, &[&[0, 1]]);
        assert!(matches!(contracted_matrix(&h, &[1.0, 1.0]), Err(Error::InvalidUniformity { .. })));
    }

    #[test]
    fn contracted_drops_zeros() {
        let h = H::from_edges(3, 3, &[&[0, 1, 2]]);
        let t = contracted_matrix(&h, &[1.0, 1.0, 0.0]).unwrap();
        assert_eq!(t.nnz(), 2);
        assert_eq!(t.get(0, 1), 0.0);
    }

    #[test]
    fn motif_counts_shared_edges() {
        let h = H::from_edges(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        let w = motif_matrix(&h);
        assert_eq!(w.get(0, 1), 2.0);
        assert_eq!(w.get(2, 3), 0.0);
        assert_eq!(w.get(3, 1), 1.0);
        assert_eq!(w.row_sums(), vec![4.0, 4.0, 2.0, 2.0]);
    }

    #[test]
    fn sparse_mul_matches_dense() {
        let h = H::from_edges(3, 5, &[&[0, 1, 2], &[1, 3, 4], &[0, 2, 4]]);
        let w = motif_matrix(&h);
        let x = [0.3, -1.0, 2.0, 0.5, 1.5];
        let dense = w.to_dense();
        let expect: Vec<f64> = dense.iter().map(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum()).collect();
        assert_eq!(w.mul_vec(&x).unwrap(), expect);
    }

    #[test]
    fn parallel_apply_agrees_with_serial() {
        // a large ring of overlapping edges crosses the parallel threshold
        let n = 60_000;
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n, (i + 7) % n]).collect();
        let h = H::new(3, n, edges, None).unwrap();
        let x: Vec<f64> = (0..n).map(|i| 1.0 + (i % 13) as f64 / 13.0).collect();
        let mut serial = vec![0.0; n];
        apply_range(&h, 0..h.edge_count(), &x, &mut serial);
        let par = apply(&h, &x).unwrap();
        for (a, b) in par.iter().zip(&serial) {
            assert!((a - b).abs() <= 1e-12 * b.abs());
        }
    }
}
