mod common;

use common::{dense_motif, dense_perron, max_abs_diff, one_norm, random_hypergraph};
use hyperc::analytic::sunflower;
use hyperc::cec::{cec, cec_from, cec_residual, path_counts};
use hyperc::{Error, Hypergraph};
use nalgebra::SVD;
use rand::Rng;

#[test]
fn agrees_with_dense_eigensolver() {
    for seed in 0..25u64 {
        let m = 3 + (seed % 2) as usize;
        let n = 8 + (seed as usize * 7) % 43;
        let h = random_hypergraph(seed, m, n, n / 2);
        let r = cec(&h, 1e-14, 1_000_000).unwrap();
        assert!(r.converged, "seed {seed}");
        let (want, lambda) = dense_perron(&dense_motif(&h));
        assert!(max_abs_diff(&r.scores, &want) <= 1e-10, "seed {seed}");
        assert!((r.eigenvalue - lambda).abs() <= 1e-9 * lambda);
    }
}

#[test]
fn residual_within_tolerance() {
    for seed in 0..10u64 {
        let h = random_hypergraph(seed, 3, 30, 20);
        let tol = 1e-10;
        let r = cec(&h, tol, 100_000).unwrap();
        assert!(r.scores.iter().all(|&s| s > 0.0));
        assert!((one_norm(&r.scores) - 1.0).abs() <= 1e-12);
        assert!(cec_residual(&h, &r.scores, r.eigenvalue).unwrap() <= tol * r.eigenvalue);
        assert!(r.residual <= tol * r.eigenvalue);
    }
}

#[test]
fn start_independence() {
    let tol = 1e-12;
    let mut rng = common::rng(9);
    for seed in 0..5u64 {
        let h = random_hypergraph(seed, 4, 25, 10);
        let a = cec(&h, tol, 1_000_000).unwrap();
        let x0: Vec<f64> = (0..25).map(|_| rng.gen_range(0.01..1.0)).collect();
        let b = cec_from(&h, &x0, tol, 1_000_000).unwrap();
        assert!(max_abs_diff(&a.scores, &b.scores) <= 10.0 * tol.max(1e-11));
    }
}

#[test]
fn parallel_to_top_singular_vector() {
    for seed in 0..5u64 {
        let h = random_hypergraph(seed, 3, 20, 10);
        let w = dense_motif(&h);
        let svd = SVD::new(w, true, false);
        let u = svd.u.unwrap();
        let top = u.column(svd.singular_values.imax());
        let c = cec(&h, 1e-14, 1_000_000).unwrap().scores;
        let dot: f64 = top.iter().zip(&c).map(|(a, b)| a * b).sum();
        let cos = dot.abs() / (top.norm() * c.iter().map(|v| v * v).sum::<f64>().sqrt());
        assert!(cos >= 1.0 - 1e-10, "seed {seed}: {cos}");
    }
}

#[test]
fn path_counts_converge_on_sunflowers() {
    for (m, r) in [(3, 2), (3, 5), (4, 3), (5, 4)] {
        let h: Hypergraph = sunflower(m, r).unwrap();
        let c = cec(&h, 1e-14, 100_000).unwrap().scores;
        let p = path_counts(&h, 50);
        let s: f64 = p.iter().sum();
        let p: Vec<f64> = p.iter().map(|v| v / s).collect();
        assert!(one_norm(&p.iter().zip(&c).map(|(a, b)| a - b).collect::<Vec<_>>()) <= 1e-6, "({m},{r})");
    }
}

#[test]
fn path_counts_are_walk_counts() {
    let h = Hypergraph::from_edges(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
    assert_eq!(path_counts(&h, 0), vec![1.0; 4]);
    assert_eq!(path_counts(&h, 1), vec![4.0, 4.0, 2.0, 2.0]);
}

#[test]
fn rejects_disconnected_and_bad_starts() {
    let h = Hypergraph::from_edges(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
    assert!(matches!(cec(&h, 1e-10, 100), Err(Error::NotConnected)));
    let h = Hypergraph::from_edges(3, 3, &[&[0, 1, 2]]);
    assert!(cec_from(&h, &[0.0, 0.0, 0.0], 1e-10, 100).is_err());
    assert!(cec_from(&h, &[1.0, -1.0, 1.0], 1e-10, 100).is_err());
    assert!(cec_from(&h, &[1.0, 1.0], 1e-10, 100).is_err());
}
