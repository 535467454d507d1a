//! Rank comparison of centrality vectors.

use std::io::Write;

use crate::centrality::ranking;
use crate::error::{Error, Result};
use crate::hypergraph::NodeLabelMap;
use crate::scalar::Scalar;

/// 1-based ranks; tied values share the average of their positions.
pub fn average_ranks<T: Scalar>(x: &[T]) -> Vec<T> {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].partial_cmp(&x[b]).expect("finite values"));
    let mut ranks = vec![T::zero(); x.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && x[order[end]] == x[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end
        let avg = T::of_usize(start + 1 + end) / T::of(2.0);
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    ranks
}

fn pearson<T: Scalar>(x: &[T], y: &[T]) -> Result<T> {
    let n = T::of_usize(x.len());
    let mx = x.iter().copied().sum::<T>() / n;
    let my = y.iter().copied().sum::<T>() / n;
    let (mut sxy, mut sxx, mut syy) = (T::zero(), T::zero(), T::zero());
    for (&a, &b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy = sxy + da * db;
        sxx = sxx + da * da;
        syy = syy + db * db;
    }
    if sxx == T::zero() || syy == T::zero() {
        return Err(Error::ConstantVector);
    }
    Ok((sxy / (sxx * syy).sqrt()).max(-T::one()).min(T::one()))
}

/// Spearman's rank correlation with average ranks for ties.
pub fn spearman<T: Scalar>(x: &[T], y: &[T]) -> Result<T> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), actual: y.len() });
    }
    if x.len() < 2 {
        return Err(Error::InvalidArgument("rank correlation needs at least two values".into()));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::InvalidArgument("rank correlation needs finite values".into()));
    }
    pearson(&average_ranks(x), &average_ranks(y))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankPoint<T = f64> {
    pub k: usize,
    /// `None` when either sub-vector is constant.
    pub rho: Option<T>,
}

/// Correlation of two centralities restricted to the reference's top-k nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct RankComparison<T = f64> {
    pub reference: String,
    pub other: String,
    pub points: Vec<RankPoint<T>>,
}

/// For each `k`, takes the `k` highest-scoring nodes of `reference` (ties by
/// id) and correlates both vectors on that node set. `ks` must be strictly
/// increasing, each in `2..=n`.
pub fn topk_correlation<T: Scalar>(
    reference: (&str, &[T]),
    other: (&str, &[T]),
    ks: &[usize],
) -> Result<RankComparison<T>> {
    let (ref_name, ref_scores) = reference;
    let (other_name, other_scores) = other;
    let n = ref_scores.len();
    if other_scores.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: other_scores.len() });
    }
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("k values must be strictly increasing".into()));
    }
    if let Some(&k) = ks.iter().find(|&&k| k < 2 || k > n) {
        return Err(Error::InvalidArgument(format!("k = {k} outside 2..={n}")));
    }
    let order = ranking(ref_scores);
    let mut points = Vec::with_capacity(ks.len());
    for &k in ks {
        let top = &order[..k];
        let a: Vec<T> = top.iter().map(|&i| ref_scores[i]).collect();
        let b: Vec<T> = top.iter().map(|&i| other_scores[i]).collect();
        let rho = match spearman(&a, &b) {
            Ok(r) => Some(r),
            Err(Error::ConstantVector) => None,
            Err(e) => return Err(e),
        };
        points.push(RankPoint { k, rho });
    }
    Ok(RankComparison { reference: ref_name.to_owned(), other: other_name.to_owned(), points })
}

/// `{10, 20, 50, 100, 200, 500, 1000, n}` clipped to `n`.
pub fn default_k_grid(n: usize) -> Vec<usize> {
    let mut ks: Vec<usize> = [10, 20, 50, 100, 200, 500, 1000]
        .into_iter()
        .filter(|&k| k < n)
        .chain(std::iter::once(n))
        .filter(|&k| k >= 2)
        .collect();
    ks.dedup();
    ks
}

/// `k,reference,other,rho`; undefined correlations are written as `NaN`.
pub fn write_correlation_csv<T: Scalar, W: Write>(mut w: W, comparisons: &[RankComparison<T>]) -> Result<()> {
    writeln!(w, "k,reference,other,rho")?;
    for c in comparisons {
        for p in &c.points {
            match p.rho {
                Some(r) => writeln!(w, "{},{},{},{}", p.k, c.reference, c.other, r)?,
                None => writeln!(w, "{},{},{},NaN", p.k, c.reference, c.other)?,
            }
        }
    }
    Ok(())
}

/// Labels of the top-k nodes per method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopTable {
    pub methods: Vec<String>,
    /// `rows[rank][method]`
    pub rows: Vec<Vec<String>>,
}

pub fn top_table<T: Scalar>(results: &[(&str, &[T])], labels: &NodeLabelMap, k: usize) -> Result<TopTable> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut columns = Vec::with_capacity(results.len());
    for (_, scores) in results {
        if scores.len() != labels.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), actual: scores.len() });
        }
        columns.push(
            ranking(scores)
                .into_iter()
                .take(k)
                .map(|i| labels.label(i).expect("label per node").to_owned())
                .collect::<Vec<_>>(),
        );
    }
    let depth = k.min(labels.len());
    let rows = (0..depth).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    Ok(TopTable { methods: results.iter().map(|(m, _)| m.to_string()).collect(), rows })
}

impl TopTable {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| rank |");
        for m in &self.methods {
            out.push_str(&format!(" {} |", m.to_uppercase()));
        }
        out.push_str("\n|---:|");
        out.push_str(&"---|".repeat(self.methods.len()));
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("| {} |", i + 1));
            for cell in row {
                out.push_str(&format!(" {} |", cell.replace('|', "\\|")));
            }
            out.push('\n');
        }
        out
    }
}
