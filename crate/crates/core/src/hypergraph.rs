//! Uniform hypergraph data model.
//!
//! Edges are stored flat as canonical (ascending) node lists, one per
//! symmetry orbit of the adjacency tensor. The tensor itself is never
//! materialized: an edge `e` stands for the `m!` entries `T[σ(e)] = w_e`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense node index in `[0, n)`.
pub type NodeId = usize;

/// An invariant violation found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateEdge { first: usize, second: usize },
    NodeOutOfRange { edge: usize, node: NodeId, n: usize },
    RepeatedNode { edge: usize, node: NodeId },
    NonPositiveWeight { edge: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateEdge { first, second } => {
                write!(f, "duplicate edge (edges {first} and {second})")
            }
            Violation::NodeOutOfRange { edge, node, n } => {
                write!(f, "out-of-range id {node} in edge {edge} (n = {n})")
            }
            Violation::RepeatedNode { edge, node } => {
                write!(f, "repeated node within edge {edge} (node {node})")
            }
            Violation::NonPositiveWeight { edge } => write!(f, "nonpositive weight on edge {edge}"),
        }
    }
}

/// An m-uniform hypergraph on nodes `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformHypergraph<T = f64> {
    m: usize,
    n: usize,
    nodes: Vec<NodeId>,
    weights: Option<Vec<T>>,
}

impl<T: Scalar> UniformHypergraph<T> {
    /// Builds and validates a hypergraph. Each edge is sorted into canonical order.
    pub fn new(m: usize, n: usize, edges: Vec<Vec<NodeId>>, weights: Option<Vec<T>>) -> Result<Self> {
        let h = Self::new_unchecked(m, n, edges, weights)?;
        let violations = validate(&h);
        if violations.is_empty() {
            Ok(h)
        } else {
            Err(Error::InvalidHypergraph(violations))
        }
    }

    /// Builds a hypergraph checking only structural shape (uniformity, arity,
    /// weight count). Use [`validate`] to inspect the remaining invariants.
    pub fn new_unchecked(
        m: usize,
        n: usize,
        edges: Vec<Vec<NodeId>>,
        weights: Option<Vec<T>>,
    ) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidUniformity { m, min: 2 });
        }
        if let Some(w) = &weights {
            if w.len() != edges.len() {
                return Err(Error::WeightCount { edges: edges.len(), weights: w.len() });
            }
        }
        let mut nodes = Vec::with_capacity(edges.len() * m);
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.len() != m {
                return Err(Error::EdgeArity { edge: i, len: e.len(), m });
            }
            e.sort_unstable();
            nodes.extend_from_slice(&e);
        }
        Ok(Self { m, n, nodes, weights })
    }

    /// Unweighted hypergraph; panics on invalid input. Intended for fixtures.
    pub fn from_edges(m: usize, n: usize, edges: &[&[NodeId]]) -> Self {
        Self::new(m, n, edges.iter().map(|e| e.to_vec()).collect(), None)
            .expect("invalid fixture hypergraph")
    }

    pub fn uniformity(&self) -> usize {
        self.m
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.len() / self.m
    }

    pub fn edge(&self, index: usize) -> &[NodeId] {
        &self.nodes[index * self.m..(index + 1) * self.m]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[NodeId]> + '_ {
        self.nodes.chunks_exact(self.m)
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weights(&self) -> Option<&[T]> {
        self.weights.as_deref()
    }

    #[inline]
    pub fn weight(&self, edge: usize) -> T {
        self.weights.as_ref().map_or(T::one(), |w| w[edge])
    }

    pub fn max_weight(&self) -> T {
        match &self.weights {
            Some(w) => w.iter().fold(T::zero(), |a, &b| a.max(b)),
            None if self.edge_count() > 0 => T::one(),
            None => T::zero(),
        }
    }

    /// Number of nonzeros of the adjacency tensor, `m! |E|`.
    pub fn tensor_nnz(&self) -> u128 {
        (1..=self.m as u128).product::<u128>() * self.edge_count() as u128
    }

    /// Converts weights to another scalar type.
    pub fn cast<U: Scalar>(&self) -> UniformHypergraph<U> {
        UniformHypergraph {
            m: self.m,
            n: self.n,
            nodes: self.nodes.clone(),
            weights: self
                .weights
                .as_ref()
                .map(|w| w.iter().map(|&x| U::of(x.as_f64())).collect()),
        }
    }

    /// Node degrees (number of incident edges).
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &v in &self.nodes {
            if v < self.n {
                d[v] += 1;
            }
        }
        d
    }
}

/// Returns every invariant violation of `h`; an empty list means valid.
pub fn validate<T: Scalar>(h: &UniformHypergraph<T>) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut seen: HashMap<&[NodeId], usize> = HashMap::new();
    for (i, e) in h.edges().enumerate() {
        for &v in e {
            if v >= h.n {
                out.push(Violation::NodeOutOfRange { edge: i, node: v, n: h.n });
            }
        }
        // edges are sorted at construction, so repeats are adjacent
        for pair in e.windows(2) {
            if pair[0] == pair[1] {
                out.push(Violation::RepeatedNode { edge: i, node: pair[0] });
            }
        }
        if let Some(&first) = seen.get(e) {
            out.push(Violation::DuplicateEdge { first, second: i });
        } else {
            seen.insert(e, i);
        }
        let w = h.weight(i);
        if !(w > T::zero()) || !w.is_finite() {
            out.push(Violation::NonPositiveWeight { edge: i });
        }
    }
    out
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Component root of every node in the clique-expansion graph.
fn components<T: Scalar>(h: &UniformHypergraph<T>) -> DisjointSets {
    let mut sets = DisjointSets::new(h.n);
    for e in h.edges() {
        for &v in &e[1..] {
            sets.union(e[0], v);
        }
    }
    sets
}

/// True iff the clique expansion of `h` is connected and every node lies
/// in at least one edge.
pub fn is_connected<T: Scalar>(h: &UniformHypergraph<T>) -> bool {
    if h.n == 0 || h.degrees().contains(&0) {
        return false;
    }
    let mut sets = components(h);
    let root = sets.find(0);
    (1..h.n).all(|v| sets.find(v) == root)
}

/// Bijective label ↔ id mapping. Ids are assigned in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeLabelMap {
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
}

impl NodeLabelMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `"0"`, `"1"`, ... for anonymous hypergraphs.
    pub fn identity(n: usize) -> Self {
        let mut map = Self::new();
        for i in 0..n {
            map.intern(&i.to_string());
        }
        map
    }

    /// Returns the id of `label`, assigning the next free id if unseen.
    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.ids.insert(label.to_owned(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: NodeId) -> Option<&str> {
        self.labels.get(id).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Builds a map from labels listed in id order; rejects duplicates.
    pub fn from_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut map = Self::new();
        for (i, label) in labels.into_iter().enumerate() {
            let label = label.into();
            if map.ids.contains_key(&label) {
                return Err(Error::InvalidArgument(format!("duplicate label {label:?} at id {i}")));
            }
            map.intern(&label);
        }
        Ok(map)
    }
}

/// Result of [`largest_component`].
#[derive(Debug, Clone)]
pub struct Component<T = f64> {
    pub hypergraph: UniformHypergraph<T>,
    pub labels: NodeLabelMap,
    /// `old_to_new[old] = Some(new)` for retained nodes.
    pub old_to_new: Vec<Option<NodeId>>,
}

/// Restricts `h` to the largest connected component of its clique expansion.
///
/// Ties between equal-size components go to the one containing the smallest
/// node id. Retained nodes keep their relative order.
pub fn largest_component<T: Scalar>(
    h: &UniformHypergraph<T>,
    labels: &NodeLabelMap,
) -> Result<Component<T>> {
    if h.edge_count() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    if labels.len() != h.n {
        return Err(Error::DimensionMismatch { expected: h.n, actual: labels.len() });
    }
    let mut sets = components(h);
    let degrees = h.degrees();
    let mut best: Option<(usize, usize)> = None; // (size, root)
    let mut visited = HashSet::new();
    for v in 0..h.n {
        if degrees[v] == 0 {
            continue;
        }
        let root = sets.find(v);
        // scanning ids in order means the first hit of a root is its minimum id
        if visited.insert(root) {
            let size = sets.size[root];
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, root));
            }
        }
    }
    let (_, root) = best.expect("nonempty edge set has a component");

    let mut old_to_new = vec![None; h.n];
    let mut new_labels = NodeLabelMap::new();
    for v in 0..h.n {
        if sets.find(v) == root {
            old_to_new[v] = Some(new_labels.len());
            new_labels.intern(labels.label(v).expect("label count checked"));
        }
    }

    let mut edges = Vec::new();
    let mut weights = h.weights.as_ref().map(|_| Vec::new());
    for (i, e) in h.edges().enumerate() {
        if old_to_new[e[0]].is_some() {
            edges.push(e.iter().map(|&v| old_to_new[v].unwrap()).collect());
            if let Some(w) = weights.as_mut() {
                w.push(h.weight(i));
            }
        }
    }
    let hypergraph = UniformHypergraph::new_unchecked(h.m, new_labels.len(), edges, weights)?;
    Ok(Component { hypergraph, labels: new_labels, old_to_new })
}
