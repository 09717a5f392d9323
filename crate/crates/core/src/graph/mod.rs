//! Simple labeled graphs on at most 64 vertices with bit-packed adjacency.

mod canon;
mod enumerate;
mod families;
mod graph6;
pub(crate) mod induced;

pub use canon::{canonical_form, canonical_form_colored, is_isomorphic, CanonKey, CanonicalGraph, CANON_MAX_VERTICES};
pub(crate) use canon::canonical_key;
pub use enumerate::{all_labeled_graphs, nonisomorphic_graphs, nonisomorphic_graphs_up_to};
pub use families::{generate, half_graph, Family, HalfSide};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use induced::contains_induced;

use std::fmt;
use std::sync::Arc;

use crate::bitmatrix::{masked_rank, BitMatrix};

pub const MAX_VERTICES: usize = 64;

/// A vertex subset as a bitmask over vertex indices.
pub type VertexSet = u64;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    InvalidVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("cannot generate {family}: {reason}")]
    Generation { family: String, reason: String },
    #[error("cannot compose graphs: {0}")]
    Composition(String),
    #[error("graph has {n} vertices; at most {cap} supported here")]
    TooLarge { n: usize, cap: usize },
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Arc<[String]>,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices labeled `0..n`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adj: vec![0; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooLarge { n: labels.len(), cap: MAX_VERTICES });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph { labels: labels.into(), adj: vec![0; n] })
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric with a
    /// zero diagonal.
    pub fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let mut g = Self::empty(n);
        g.adj = adj;
        debug_assert!(g.is_well_formed());
        g
    }

    /// Same labels, new adjacency rows.
    pub(crate) fn with_adjacency(&self, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), self.adj.len());
        let g = Graph { labels: self.labels.clone(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn all_vertices(&self) -> VertexSet {
        crate::bitmatrix::low_mask(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            let mut higher = self.adj[u] & !crate::bitmatrix::low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn index_of(&self, label: &str) -> Result<usize, GraphError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GraphError::InvalidVertex(label.to_string()))
    }

    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet, GraphError> {
        let mut set = 0;
        for l in labels {
            set |= 1 << self.index_of(l.as_ref())?;
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<String> {
        members(set).map(|v| self.labels[v].clone()).collect()
    }

    pub fn complement(&self) -> Self {
        let all = self.all_vertices();
        let adj = (0..self.n()).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        self.with_adjacency(adj)
    }

    /// `G[S]`, keeping labels and the relative vertex order.
    pub fn induce(&self, set: VertexSet) -> Result<Self, GraphError> {
        if set & !self.all_vertices() != 0 {
            return Err(GraphError::VertexOutOfRange((set & !self.all_vertices()).trailing_zeros() as usize));
        }
        Ok(self.induce_unchecked(set))
    }

    pub fn induce_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self, GraphError> {
        let set = self.set_from_labels(labels)?;
        Ok(self.induce_unchecked(set))
    }

    pub(crate) fn induce_unchecked(&self, set: VertexSet) -> Self {
        let keep: Vec<usize> = members(set).collect();
        let adj = keep.iter().map(|&v| compress(self.adj[v], set)).collect();
        Graph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
        }
    }

    pub fn remove_vertices(&self, set: VertexSet) -> Self {
        self.induce_unchecked(self.all_vertices() & !set)
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.all_vertices())
    }

    /// Components of `G[within]`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & within & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None::<bool>; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for w in members(self.adj[v]) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// The adjacency matrix `A(G)` over GF(2).
    pub fn adjacency_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.n(), self.n());
        for (u, v) in self.edges() {
            m.set(u, v, true);
            m.set(v, u, true);
        }
        m
    }

    /// Cut-rank of a vertex set given as a mask.
    pub fn cut_rank_mask(&self, set: VertexSet) -> usize {
        let all = self.all_vertices();
        let set = set & all;
        if set == 0 || set == all {
            return 0;
        }
        // rank(A[S, V∖S]) = rank of the transpose; iterate the smaller side
        let rest = all & !set;
        if set.count_ones() <= rest.count_ones() {
            masked_rank(&self.adj, set, rest)
        } else {
            masked_rank(&self.adj, rest, set)
        }
    }

    /// The cut-rank function `ρ_G(S)` on labeled vertices.
    pub fn cut_rank<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize, GraphError> {
        Ok(self.cut_rank_mask(self.set_from_labels(labels)?))
    }

    fn is_well_formed(&self) -> bool {
        let all = self.all_vertices();
        (0..self.n()).all(|v| {
            self.adj[v] & !all == 0
                && (self.adj[v] >> v) & 1 == 0
                && members(self.adj[v]).all(|w| (self.adj[w] >> v) & 1 == 1)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", self.labels[u], self.labels[v])?;
        }
        f.write_str("])")
    }
}

/// Iterates the members of a bitmask set in increasing order.
pub fn members(set: u64) -> impl Iterator<Item = usize> {
    let mut s = set;
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

/// Packs the bits of `word` selected by `mask` into the low bits.
pub(crate) fn compress(word: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (bit, v) in members(mask).enumerate() {
        if (word >> v) & 1 == 1 {
            out |= 1 << bit;
        }
    }
    out
}

/// Cut-rank of `S` in `G`; the empty and full sets have cut-rank zero.
pub fn cut_rank<S: AsRef<str>>(g: &Graph, set: &[S]) -> Result<usize, GraphError> {
    g.cut_rank(set)
}
