//! Canonical hyperedge-list text format and the label file.
//!
//! ```text
//! % comment
//! 3 5          <- m n
//! 0 1 2
//! 2 3 4 #w: 0.5
//! ```
//!
//! Ids are 0-based. A weight follows a `#w:` token (`#w:0.5` is accepted
//! too); edges without one get weight 1. Labels are stored separately, one
//! `id<TAB>label` line per node.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::hypergraph::{NodeLabelMap, UniformHypergraph};
use crate::scalar::Scalar;

const WEIGHT_TOKEN: &str = "#w:";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses the canonical edge list and validates the result.
pub fn read_edge_list<T: Scalar, R: BufRead>(reader: R) -> Result<UniformHypergraph<T>> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<Option<f64>> = Vec::new();

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let Some((m, _)) = header else {
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let [m, n] = fields[..] else {
                return Err(parse_err(lineno, "header must be `m n`"));
            };
            let m = m.parse().map_err(|_| parse_err(lineno, format!("bad uniformity {m:?}")))?;
            let n = n.parse().map_err(|_| parse_err(lineno, format!("bad node count {n:?}")))?;
            header = Some((m, n));
            continue;
        };

        let (ids, weight) = match trimmed.find(WEIGHT_TOKEN) {
            Some(pos) => {
                let w = trimmed[pos + WEIGHT_TOKEN.len()..].trim();
                let w: f64 = w.parse().map_err(|_| parse_err(lineno, format!("bad weight {w:?}")))?;
                (&trimmed[..pos], Some(w))
            }
            None => (trimmed, None),
        };
        let edge = ids
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad node id {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if edge.len() != m {
            return Err(parse_err(lineno, format!("expected {m} node ids, found {}", edge.len())));
        }
        edges.push(edge);
        weights.push(weight);
    }

    let (m, n) = header.ok_or_else(|| parse_err(0, "missing `m n` header"))?;
    let weights = weights
        .iter()
        .any(Option::is_some)
        .then(|| weights.iter().map(|w| T::of(w.unwrap_or(1.0))).collect());
    UniformHypergraph::new(m, n, edges, weights)
}

/// Writes `h` in canonical form. Weights are emitted only for weighted hypergraphs.
pub fn write_edge_list<T: Scalar, W: Write>(mut w: W, h: &UniformHypergraph<T>) -> Result<()> {
    writeln!(w, "{} {}", h.uniformity(), h.node_count())?;
    for (i, e) in h.edges().enumerate() {
        let ids: Vec<String> = e.iter().map(usize::to_string).collect();
        if h.is_weighted() {
            writeln!(w, "{} {WEIGHT_TOKEN} {}", ids.join(" "), h.weight(i))?;
        } else {
            writeln!(w, "{}", ids.join(" "))?;
        }
    }
    Ok(())
}

pub fn write_labels<W: Write>(mut w: W, labels: &NodeLabelMap) -> Result<()> {
    for (id, label) in labels.labels().iter().enumerate() {
        writeln!(w, "{id}\t{label}")?;
    }
    Ok(())
}

/// Reads an `id<TAB>label` file. Ids must be exactly `0..n` in order.
pub fn read_labels<R: BufRead>(reader: R) -> Result<NodeLabelMap> {
    let mut labels = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (id, label) = line
            .split_once('\t')
            .ok_or_else(|| parse_err(i + 1, "expected `id<TAB>label`"))?;
        let id: usize = id.trim().parse().map_err(|_| parse_err(i + 1, format!("bad id {id:?}")))?;
        if id != labels.len() {
            return Err(parse_err(i + 1, format!("expected id {}, found {id}", labels.len())));
        }
        labels.push(label.to_owned());
    }
    NodeLabelMap::from_labels(labels)
}
