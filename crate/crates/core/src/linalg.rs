//! Vector helpers and a small dense symmetric eigensolver.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn norm1<T: Scalar>(x: &[T]) -> T {
    x.iter().map(|v| v.abs()).sum()
}

pub fn norm2<T: Scalar>(x: &[T]) -> T {
    x.iter().map(|&v| v * v).sum::<T>().sqrt()
}

pub fn norm_inf<T: Scalar>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |a, v| a.max(v.abs()))
}

pub fn dot<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).map(|(&a, &b)| a * b).sum()
}

/// `‖x - y‖₁`
pub fn dist1<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).map(|(&a, &b)| (a - b).abs()).sum()
}

/// `‖x - y‖₂`
pub fn dist2<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).map(|(&a, &b)| (a - b) * (a - b)).sum::<T>().sqrt()
}

/// `x / ‖x‖₁`. Entries are expected nonnegative.
pub fn normalize_one_norm<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    let s = norm1(x);
    if s == T::zero() || !s.is_finite() {
        return Err(Error::ZeroVector);
    }
    Ok(x.iter().map(|&v| v / s).collect())
}

/// `x / ‖x‖₂`.
pub fn normalize_two_norm<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    let s = norm2(x);
    if s == T::zero() || !s.is_finite() {
        return Err(Error::ZeroVector);
    }
    Ok(x.iter().map(|&v| v / s).collect())
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending. Only the upper triangle is read.
pub fn symmetric_eigenvalues<T: Scalar>(a: &[Vec<T>]) -> Vec<T> {
    let n = a.len();
    let mut a: Vec<Vec<T>> = a.to_vec();
    let eps = T::epsilon();
    for i in 0..n {
        for j in 0..i {
            a[i][j] = a[j][i];
        }
    }
    for _sweep in 0..100 {
        let off: T = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let diag: T = (0..n).map(|i| a[i][i] * a[i][i]).sum();
        if off <= eps * eps * diag || off == T::zero() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (T::of(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<T> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eig
}

/// `Uᵀ A U` for an orthonormal basis `U` of the complement of the unit
/// vector `x`, built from the Householder reflector that maps `x` to `±e_k`.
pub fn project_out<T: Scalar>(a: &[Vec<T>], x: &[T]) -> Vec<Vec<T>> {
    let n = x.len();
    // reflect onto the largest coordinate for stability
    let k = (0..n)
        .max_by(|&i, &j| x[i].abs().partial_cmp(&x[j].abs()).expect("finite"))
        .expect("nonempty vector");
    let sign = if x[k] >= T::zero() { T::one() } else { -T::one() };
    let mut v = x.to_vec();
    v[k] = v[k] + sign;
    let vv = dot(&v, &v);
    let beta = T::of(2.0) / vv;

    // H A H with H = I - beta v vᵀ
    let av: Vec<T> = a.iter().map(|row| dot(row, &v)).collect();
    let vav = dot(&v, &av);
    let mut out = vec![vec![T::zero(); n - 1]; n - 1];
    let idx: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    for (r, &i) in idx.iter().enumerate() {
        for (c, &j) in idx.iter().enumerate() {
            out[r][c] = a[i][j] - beta * v[i] * av[j] - beta * av[i] * v[j] + beta * beta * vav * v[i] * v[j];
        }
    }
    out
}
