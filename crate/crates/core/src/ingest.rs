//! Building uniform hypergraphs from raw data.
//!
//! * n-gram lists: the `m` distinct words of an m-gram form an edge,
//!   regardless of word order.
//! * transactions, `subsets` mode: every m-subset of a record is an edge
//!   (tags that co-annotate a question).
//! * transactions, `exact` mode: a record is an edge iff it has exactly `m`
//!   distinct items (drug combinations).
//!
//! Node ids follow first appearance among accepted records; edges are
//! emitted in sorted order.

use std::collections::HashMap;
use std::io::BufRead;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{largest_component, NodeId, NodeLabelMap, UniformHypergraph};
use crate::scalar::Scalar;

/// Where the frequency field sits on an n-gram line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrequencyColumn {
    /// `m + 1` fields with a numeric first or last field; `m` fields means no frequency.
    #[default]
    Auto,
    None,
    First,
    Last,
}

#[derive(Debug, Clone)]
pub struct NgramOptions {
    pub m: usize,
    pub frequency: FrequencyColumn,
    /// Accumulate frequencies into edge weights instead of a binary tensor.
    pub weighted: bool,
    pub lowercase: bool,
}

impl NgramOptions {
    pub fn new(m: usize) -> Self {
        Self { m, frequency: FrequencyColumn::Auto, weighted: false, lowercase: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransactionMode {
    Subsets,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Separator {
    Comma,
    #[default]
    Whitespace,
}

#[derive(Debug, Clone)]
pub struct TransactionOptions {
    pub m: usize,
    pub mode: TransactionMode,
    pub weighted: bool,
    pub lowercase: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionRecord {
    pub items: Vec<String>,
    pub multiplicity: usize,
}

impl TransactionRecord {
    pub fn new<S: Into<String>>(items: impl IntoIterator<Item = S>) -> Self {
        Self { items: items.into_iter().map(Into::into).collect(), multiplicity: 1 }
    }
}

/// Counts of what was read, kept, and skipped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    pub records: usize,
    pub malformed: usize,
    /// n-grams with fewer than `m` distinct words.
    pub repeated_words: usize,
    /// Transactions that listed an item more than once.
    pub duplicate_items: usize,
    /// Transactions contributing no edge (too few items, or wrong size in exact mode).
    pub unused_records: usize,
    pub edges: usize,
}

#[derive(Debug, Clone)]
pub struct BuiltHypergraph<T = f64> {
    pub hypergraph: UniformHypergraph<T>,
    pub labels: NodeLabelMap,
    pub report: IngestReport,
}

/// Deduplicating edge accumulator.
struct EdgeSet<T> {
    labels: NodeLabelMap,
    index: HashMap<Vec<NodeId>, usize>,
    edges: Vec<Vec<NodeId>>,
    weights: Vec<T>,
}

impl<T: Scalar> EdgeSet<T> {
    fn new() -> Self {
        Self { labels: NodeLabelMap::new(), index: HashMap::new(), edges: Vec::new(), weights: Vec::new() }
    }

    fn intern_all(&mut self, items: &[String]) -> Vec<NodeId> {
        items.iter().map(|s| self.labels.intern(s)).collect()
    }

    fn add(&mut self, mut edge: Vec<NodeId>, weight: T) {
        edge.sort_unstable();
        match self.index.get(&edge) {
            Some(&i) => self.weights[i] = self.weights[i] + weight,
            None => {
                self.index.insert(edge.clone(), self.edges.len());
                self.edges.push(edge);
                self.weights.push(weight);
            }
        }
    }

    fn finish(self, m: usize, weighted: bool, mut report: IngestReport) -> Result<BuiltHypergraph<T>> {
        if self.edges.is_empty() {
            return Err(Error::EmptyHypergraph);
        }
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edges[a].cmp(&self.edges[b]));
        let edges = order.iter().map(|&i| self.edges[i].clone()).collect();
        let weights = weighted.then(|| order.iter().map(|&i| self.weights[i]).collect());
        report.edges = order.len();
        let hypergraph = UniformHypergraph::new(m, self.labels.len(), edges, weights)?;
        Ok(BuiltHypergraph { hypergraph, labels: self.labels, report })
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 3 {
        Err(Error::InvalidUniformity { m, min: 3 })
    } else {
        Ok(())
    }
}

fn split_ngram<'a>(fields: &[&'a str], m: usize, column: FrequencyColumn) -> Option<(Vec<&'a str>, f64)> {
    let freq = |s: &str| s.parse::<f64>().ok().filter(|f| f.is_finite() && *f > 0.0);
    match column {
        FrequencyColumn::None => (fields.len() == m).then(|| (fields.to_vec(), 1.0)),
        FrequencyColumn::First if fields.len() == m + 1 => Some((fields[1..].to_vec(), freq(fields[0])?)),
        FrequencyColumn::Last if fields.len() == m + 1 => Some((fields[..m].to_vec(), freq(fields[m])?)),
        FrequencyColumn::Auto if fields.len() == m => Some((fields.to_vec(), 1.0)),
        FrequencyColumn::Auto if fields.len() == m + 1 => {
            if let Some(f) = freq(fields[0]) {
                Some((fields[1..].to_vec(), f))
            } else {
                freq(fields[m]).map(|f| (fields[..m].to_vec(), f))
            }
        }
        _ => None,
    }
}

/// Builds an m-uniform hypergraph from an n-gram list, one n-gram per line.
///
/// Malformed lines are skipped and counted; more than half malformed aborts.
/// n-grams with a repeated word are dropped.
pub fn from_ngrams<T: Scalar, R: BufRead>(reader: R, opts: &NgramOptions) -> Result<BuiltHypergraph<T>> {
    check_m(opts.m)?;
    let mut set = EdgeSet::<T>::new();
    let mut report = IngestReport::default();
    for line in reader.lines() {
        let line = line?;
        let line = if opts.lowercase { line.to_lowercase() } else { line };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        report.records += 1;
        let Some((words, freq)) = split_ngram(&fields, opts.m, opts.frequency) else {
            report.malformed += 1;
            continue;
        };
        let mut distinct = words.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() < opts.m {
            report.repeated_words += 1;
            continue;
        }
        let words: Vec<String> = words.into_iter().map(str::to_owned).collect();
        let edge = set.intern_all(&words);
        set.add(edge, T::of(freq));
    }
    if report.malformed * 2 > report.records {
        return Err(Error::TooManyMalformed { malformed: report.malformed, total: report.records });
    }
    set.finish(opts.m, opts.weighted, report)
}

/// Reads one transaction per line; blank lines are skipped.
pub fn read_transactions<R: BufRead>(reader: R, sep: Separator) -> Result<Vec<TransactionRecord>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let items: Vec<String> = match sep {
            Separator::Comma => line.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_owned).collect(),
            Separator::Whitespace => line.split_whitespace().map(str::to_owned).collect(),
        };
        if !items.is_empty() {
            out.push(TransactionRecord { items, multiplicity: 1 });
        }
    }
    Ok(out)
}

/// All size-`m` combinations of `0..n` in lexicographic order.
fn for_each_combination(n: usize, m: usize, mut f: impl FnMut(&[usize])) {
    if m > n {
        return;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        f(&idx);
        let Some(i) = (0..m).rev().find(|&i| idx[i] != i + n - m) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Builds an m-uniform hypergraph from transaction records.
pub fn from_transactions<T: Scalar, I>(records: I, opts: &TransactionOptions) -> Result<BuiltHypergraph<T>>
where
    I: IntoIterator<Item = TransactionRecord>,
{
    check_m(opts.m)?;
    let mut set = EdgeSet::<T>::new();
    let mut report = IngestReport::default();
    for record in records {
        report.records += 1;
        let mut items: Vec<String> = Vec::with_capacity(record.items.len());
        for item in record.items {
            let item = if opts.lowercase { item.to_lowercase() } else { item };
            if item.is_empty() {
                continue;
            }
            if items.contains(&item) {
                report.duplicate_items += 1;
            } else {
                items.push(item);
            }
        }
        let usable = match opts.mode {
            TransactionMode::Subsets => items.len() >= opts.m,
            TransactionMode::Exact => items.len() == opts.m,
        };
        if !usable {
            report.unused_records += 1;
            continue;
        }
        let weight = T::of_usize(record.multiplicity.max(1));
        let ids = set.intern_all(&items);
        for_each_combination(ids.len(), opts.m, |c| {
            set.add(c.iter().map(|&i| ids[i]).collect(), weight);
        });
    }
    set.finish(opts.m, opts.weighted, report)
}

/// Summary in the layout of a dataset table: node count, edge count, and
/// tensor nonzeros with and without the `m!` symmetry factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypergraphStats {
    pub m: usize,
    pub nodes: usize,
    pub edges: usize,
    pub nnz: u128,
    pub nnz_per_symmetry: usize,
}

impl HypergraphStats {
    pub fn of<T: Scalar>(h: &UniformHypergraph<T>) -> Self {
        Self {
            m: h.uniformity(),
            nodes: h.node_count(),
            edges: h.edge_count(),
            nnz: h.tensor_nnz(),
            nnz_per_symmetry: h.edge_count(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Prepared<T = f64> {
    pub hypergraph: UniformHypergraph<T>,
    pub labels: NodeLabelMap,
    pub stats: HypergraphStats,
}

/// Restricts to the largest connected component and summarizes it.
pub fn prepare<T: Scalar>(h: &UniformHypergraph<T>, labels: &NodeLabelMap) -> Result<Prepared<T>> {
    let c = largest_component(h, labels)?;
    let stats = HypergraphStats::of(&c.hypergraph);
    Ok(Prepared { hypergraph: c.hypergraph, labels: c.labels, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ngrams(text: &str, m: usize) -> Result<BuiltHypergraph<f64>> {
        from_ngrams(text.as_bytes(), &NgramOptions::new(m))
    }

    #[test]
    fn permutations_collapse() {
        let b = ngrams("a b c\nb a c\na b d\n", 3).unwrap();
        assert_eq!((b.hypergraph.node_count(), b.hypergraph.edge_count()), (4, 2));
        assert_eq!(b.labels.labels(), ["a", "b", "c", "d"]);
    }

    #[test]
    fn repeated_words_are_dropped() {
        let b = ngrams("the end of the\nin the end of\n", 4).unwrap();
        assert_eq!(b.report.repeated_words, 1);
        assert_eq!(b.hypergraph.edge_count(), 1);
        assert!(matches!(ngrams("the end of the\n", 4), Err(Error::EmptyHypergraph)));
    }

    #[test]
    fn empty_stream_has_no_edges() {
        assert!(matches!(ngrams("", 3), Err(Error::EmptyHypergraph)));
    }

    #[test]
    fn frequency_columns() {
        let b = from_ngrams::<f64, _>(
            "120 a b c\nb c d 7\n".as_bytes(),
            &NgramOptions { weighted: true, ..NgramOptions::new(3) },
        )
        .unwrap();
        assert_eq!(b.hypergraph.weights(), Some(&[120.0, 7.0][..]));
        let fixed = NgramOptions { frequency: FrequencyColumn::Last, ..NgramOptions::new(3) };
        let b = from_ngrams::<f64, _>("a b c 3\n1 2 3 4\n".as_bytes(), &fixed).unwrap();
        assert_eq!(b.labels.labels(), ["a", "b", "c", "1", "2", "3"]);
        assert!(!b.hypergraph.is_weighted());
    }

    #[test]
    fn weighted_duplicates_accumulate() {
        let opts = NgramOptions { weighted: true, ..NgramOptions::new(3) };
        let b = from_ngrams::<f64, _>("a b c 2\nc b a 3\n".as_bytes(), &opts).unwrap();
        assert_eq!(b.hypergraph.weights(), Some(&[5.0][..]));
    }

    #[test]
    fn malformed_lines_are_skipped_until_majority() {
        let b = ngrams("a b c\nb c d\nbroken\n", 3).unwrap();
        assert_eq!(b.report.malformed, 1);
        assert!(matches!(ngrams("a b c\nx\ny z\n", 3), Err(Error::TooManyMalformed { malformed: 2, total: 3 })));
    }

    #[test]
    fn lowercase_flag() {
        let opts = NgramOptions { lowercase: true, ..NgramOptions::new(3) };
        let b = from_ngrams::<f64, _>("The a b\nthe A B\n".as_bytes(), &opts).unwrap();
        assert_eq!(b.hypergraph.edge_count(), 1);
        assert_eq!(ngrams("The a b\nthe A B\n", 3).unwrap().hypergraph.edge_count(), 2);
    }

    fn tx(records: &[&[&str]], m: usize, mode: TransactionMode) -> Result<BuiltHypergraph<f64>> {
        let opts = TransactionOptions { m, mode, weighted: false, lowercase: false };
        from_transactions(records.iter().map(|r| TransactionRecord::new(r.iter().copied())), &opts)
    }

    #[test]
    fn transaction_modes() {
        let b = tx(&[&["a", "b", "c", "d"]], 3, TransactionMode::Subsets).unwrap();
        assert_eq!(b.hypergraph.edge_count(), 4);
        assert!(matches!(tx(&[&["a", "b", "c", "d"]], 3, TransactionMode::Exact), Err(Error::EmptyHypergraph)));
        for mode in [TransactionMode::Subsets, TransactionMode::Exact] {
            let b = tx(&[&["a", "b", "c"], &["a", "b", "c"]], 3, mode).unwrap();
            assert_eq!(b.hypergraph.edge_count(), 1);
        }
    }

    #[test]
    fn duplicate_items_are_collapsed() {
        let b = tx(&[&["a", "b", "a", "c"]], 3, TransactionMode::Exact).unwrap();
        assert_eq!(b.hypergraph.edge_count(), 1);
        assert_eq!(b.report.duplicate_items, 1);
    }

    #[test]
    fn transaction_parsing() {
        let r = read_transactions("a, b ,c\n\nd,e\n".as_bytes(), Separator::Comma).unwrap();
        assert_eq!(r, vec![TransactionRecord::new(["a", "b", "c"]), TransactionRecord::new(["d", "e"])]);
        let r = read_transactions("a b  c\n".as_bytes(), Separator::Whitespace).unwrap();
        assert_eq!(r[0].items, ["a", "b", "c"]);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        for_each_combination(2, 3, |_| panic!("no combinations"));
    }

    #[test]
    fn prepare_reports_table_stats() {
        let b = tx(&[&["a", "b", "c"], &["c", "d", "e"]], 3, TransactionMode::Exact).unwrap();
        let p = prepare(&b.hypergraph, &b.labels).unwrap();
        assert_eq!(p.stats, HypergraphStats { m: 3, nodes: 5, edges: 2, nnz: 12, nnz_per_symmetry: 2 });
        let b = tx(&[&["a", "b", "c"], &["d", "e", "f"], &["f", "g", "h"]], 3, TransactionMode::Exact).unwrap();
        let p = prepare(&b.hypergraph, &b.labels).unwrap();
        assert_eq!((p.stats.nodes, p.stats.edges), (5, 2));
        assert_eq!(p.labels.labels(), ["d", "e", "f", "g", "h"]);
    }
}
