//! Binary matroids given by GF(2) representations.
//!
//! Columns of the representation are the elements. Sets of elements are
//! bitmasks, so a matroid has at most 64 elements and its representation at
//! most 64 rows.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::bitmatrix::{low_mask, rank_of_words};
use crate::graph::{canonical_form_colored, members, CanonKey, Graph, GraphError, CANON_MAX_VERTICES};
use crate::par::Execution;
use crate::width::{rank_depth_of, ConnectivitySystem, DepthResult, WidthError};
use crate::BitMatrix;

/// Ground-set size limit for exact branch-depth.
pub const BRANCH_DEPTH_MAX_ELEMENTS: usize = 8;
/// Ground-set size limit for exact minor search.
pub const MINOR_SEARCH_MAX_ELEMENTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element label `{0}`")]
    DuplicateElement(String),
    #[error("the given set is not a basis")]
    InvalidBasis,
    #[error("delete and contract sets overlap")]
    Overlap,
    #[error("{what} is {size}, above the limit of {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("rank axiom violated: {0}")]
    Axiom(String),
    #[error(transparent)]
    Width(#[from] WidthError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatroid {
    labels: Arc<[String]>,
    rep: BitMatrix,
    /// Column `e` of `rep` packed into one word.
    columns: Vec<u64>,
}

impl BinaryMatroid {
    pub fn new(labels: Vec<String>, rep: BitMatrix) -> Result<Self, MatroidError> {
        if labels.len() != rep.cols() {
            return Err(MatroidError::Parse {
                line: 0,
                message: format!("{} labels for {} columns", labels.len(), rep.cols()),
            });
        }
        if labels.len() > 64 {
            return Err(MatroidError::TooLarge { what: "element count", size: labels.len(), cap: 64 });
        }
        if rep.rows() > 64 {
            return Err(MatroidError::TooLarge { what: "representation row count", size: rep.rows(), cap: 64 });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(MatroidError::DuplicateElement(l.clone()));
            }
        }
        let columns = (0..rep.cols())
            .map(|c| (0..rep.rows()).filter(|&r| rep.get(r, c)).fold(0u64, |w, r| w | 1 << r))
            .collect();
        Ok(BinaryMatroid {
            labels: labels.into(),
            rep,
            columns,
        })
    }

    /// Elements labeled `0..cols`.
    pub fn from_matrix(rep: BitMatrix) -> Result<Self, MatroidError> {
        Self::new((0..rep.cols()).map(|i| i.to_string()).collect(), rep)
    }

    /// Rank-`n` matroid in which every set is independent.
    pub fn free(n: usize) -> Self {
        Self::from_matrix(BitMatrix::identity(n)).expect("identity is a valid representation")
    }

    /// Uniformly random `rows x cols` representation.
    pub fn random<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rng.gen_bool(0.5));
            }
        }
        Self::from_matrix(m).expect("random representation within limits")
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

    pub fn representation(&self) -> &BitMatrix {
        &self.rep
    }

    pub fn ground(&self) -> u64 {
        low_mask(self.len())
    }

    pub fn index_of(&self, label: &str) -> Result<usize, MatroidError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| MatroidError::UnknownElement(label.to_string()))
    }

    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64, MatroidError> {
        labels.iter().try_fold(0u64, |m, l| Ok(m | 1 << self.index_of(l.as_ref())?))
    }

    pub fn rank_of(&self, set: u64) -> usize {
        let mut buf = [0u64; 64];
        let mut len = 0;
        for e in members(set & self.ground()) {
            if self.columns[e] != 0 {
                buf[len] = self.columns[e];
                len += 1;
            }
        }
        rank_of_words(&mut buf[..len])
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground())
    }

    /// `r(X) + r(E - X) - r(E)`.
    pub fn connectivity_of(&self, set: u64) -> usize {
        let set = set & self.ground();
        self.rank_of(set) + self.rank_of(self.ground() & !set) - self.rank()
    }

    pub fn rank_fn<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize, MatroidError> {
        Ok(self.rank_of(self.set_from_labels(labels)?))
    }

    pub fn connectivity<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize, MatroidError> {
        Ok(self.connectivity_of(self.set_from_labels(labels)?))
    }

    pub fn connectivity_system(&self) -> ConnectivitySystem {
        let m = self.clone();
        ConnectivitySystem::from_fn(self.labels.to_vec(), move |s| m.connectivity_of(s))
    }

    pub fn is_basis(&self, set: u64) -> bool {
        set & !self.ground() == 0 && set.count_ones() as usize == self.rank() && self.rank_of(set) == self.rank()
    }

    /// Lexicographically first basis, built greedily.
    pub fn some_basis(&self) -> u64 {
        let mut basis = 0;
        for e in 0..self.len() {
            if self.rank_of(basis | 1 << e) > basis.count_ones() as usize {
                basis |= 1 << e;
            }
        }
        basis
    }

    /// All bases in increasing mask order.
    pub fn bases(&self) -> Vec<u64> {
        let r = self.rank();
        subsets_of_size(self.ground(), r).into_iter().filter(|&b| self.rank_of(b) == r).collect()
    }

    /// Samples monotonicity, submodularity and the small-set conditions.
    pub fn check_rank_axioms<R: Rng>(&self, rng: &mut R, samples: usize) -> Result<(), MatroidError> {
        let fail = |s: String| Err(MatroidError::Axiom(s));
        if self.rank_of(0) != 0 {
            return fail("r(empty) != 0".into());
        }
        for e in 0..self.len() {
            if self.rank_of(1 << e) > 1 {
                return fail(format!("r({{{}}}) > 1", self.labels[e]));
            }
        }
        let ground = self.ground();
        for _ in 0..samples {
            let (x, y) = (rng.gen::<u64>() & ground, rng.gen::<u64>() & ground);
            if self.rank_of(x & y) > self.rank_of(x) {
                return fail(format!("not monotone at {x:#b}"));
            }
            if self.rank_of(x | y) + self.rank_of(x & y) > self.rank_of(x) + self.rank_of(y) {
                return fail(format!("not submodular at {x:#b}, {y:#b}"));
            }
        }
        Ok(())
    }

    /// Row-reduced representation with the basis columns forming an
    /// identity, plus the basis element owning each row.
    fn reduced(&self, basis: u64) -> Result<(BitMatrix, Vec<usize>), MatroidError> {
        if !self.is_basis(basis) {
            return Err(MatroidError::InvalidBasis);
        }
        let mut m = self.rep.clone();
        let order: Vec<usize> = members(basis).collect();
        let pivots = m.eliminate(Some(&order));
        let rows: Vec<usize> = (0..pivots.len()).collect();
        Ok((m.select_rows(&rows), pivots.into_iter().map(|(_, c)| c).collect()))
    }

    /// Equivalent representation with exactly `rank` rows, in standard form
    /// with respect to `basis`.
    pub fn standard_form(&self, basis: u64) -> Result<BinaryMatroid, MatroidError> {
        let (m, _) = self.reduced(basis)?;
        BinaryMatroid::new(self.labels.to_vec(), m)
    }

    /// Bipartite graph on the elements: basis element `b` is adjacent to
    /// non-basis `e` iff `b` lies in the fundamental circuit of `e`.
    pub fn fundamental_graph(&self, basis: u64) -> Result<Graph, MatroidError> {
        let (m, owner) = self.reduced(basis)?;
        let mut g = Graph::with_labels(self.labels.to_vec())?;
        for (row, &b) in owner.iter().enumerate() {
            for e in members(self.ground() & !basis) {
                if m.get(row, e) {
                    g.add_edge(b, e);
                }
            }
        }
        Ok(g)
    }

    /// `M \ delete / contract`.
    pub fn minor(&self, delete: u64, contract: u64) -> Result<BinaryMatroid, MatroidError> {
        if delete & contract != 0 {
            return Err(MatroidError::Overlap);
        }
        let ground = self.ground();
        let mut cols = self.columns.clone();
        let mut live_rows = low_mask(self.rep.rows());
        for c in members(contract & ground) {
            let col = cols[c] & live_rows;
            if col == 0 {
                // a loop, so contraction is deletion
                continue;
            }
            let p = col.trailing_zeros();
            for other in cols.iter_mut() {
                if *other >> p & 1 == 1 {
                    *other ^= col;
                }
            }
            live_rows &= !(1 << p);
        }
        let keep: Vec<usize> = members(ground & !delete & !contract).collect();
        let rows: Vec<usize> = members(live_rows).collect();
        let mut rep = BitMatrix::zeros(rows.len(), keep.len());
        for (j, &e) in keep.iter().enumerate() {
            for (i, &r) in rows.iter().enumerate() {
                if cols[e] >> r & 1 == 1 {
                    rep.set(i, j, true);
                }
            }
        }
        BinaryMatroid::new(keep.iter().map(|&e| self.labels[e].clone()).collect(), rep)
    }

    pub fn minor_by_labels<S: AsRef<str>>(&self, delete: &[S], contract: &[S]) -> Result<BinaryMatroid, MatroidError> {
        self.minor(self.set_from_labels(delete)?, self.set_from_labels(contract)?)
    }

    /// The dual matroid: `[I | D]` becomes `[D^T | I]`.
    pub fn dual(&self) -> BinaryMatroid {
        let basis = self.some_basis();
        let (m, owner) = self.reduced(basis).expect("greedy basis is a basis");
        let rest: Vec<usize> = members(self.ground() & !basis).collect();
        let mut rep = BitMatrix::zeros(rest.len(), self.len());
        for (j, &e) in rest.iter().enumerate() {
            rep.set(j, e, true);
            for (row, &b) in owner.iter().enumerate() {
                if m.get(row, e) {
                    rep.set(j, b, true);
                }
            }
        }
        BinaryMatroid::new(self.labels.to_vec(), rep).expect("same labels")
    }

    /// A key shared exactly by isomorphic matroids having this basis
    /// position: the fundamental graph canonized with the basis marked.
    fn basis_key(&self, basis: u64) -> Result<CanonKey, MatroidError> {
        let fg = self.fundamental_graph(basis)?;
        Ok(canonical_form_colored(&fg, basis)?.key())
    }

    /// Keys over every basis; two matroids are isomorphic iff one's key for
    /// any single basis lies in the other's set.
    fn all_basis_keys(&self) -> Result<HashSet<CanonKey>, MatroidError> {
        self.bases().into_iter().map(|b| self.basis_key(b)).collect()
    }

    pub fn is_isomorphic(&self, other: &BinaryMatroid) -> Result<bool, MatroidError> {
        if self.len() != other.len() || self.rank() != other.rank() {
            return Ok(false);
        }
        check_canon_size(self.len())?;
        let key = self.basis_key(self.some_basis())?;
        Ok(other.all_basis_keys()?.contains(&key))
    }

    /// Parses the text format: a header line of element labels followed by
    /// one line per row of 0/1 entries. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, MatroidError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let Some((_, header)) = lines.next() else {
            return Err(MatroidError::Parse { line: 1, message: "missing header line".into() });
        };
        let labels: Vec<String> = header.split_whitespace().map(str::to_string).collect();
        let mut rows = Vec::new();
        for (line, l) in lines {
            let tokens: Vec<&str> = l.split_whitespace().collect();
            let entries: Vec<char> = if tokens.len() == 1 && labels.len() > 1 { tokens[0].chars().collect() } else { tokens.iter().flat_map(|t| t.chars()).collect() };
            if tokens.len() > 1 && tokens.iter().any(|t| t.len() != 1) {
                return Err(MatroidError::Parse { line, message: "entries must be single 0/1 digits".into() });
            }
            if entries.len() != labels.len() {
                return Err(MatroidError::Parse {
                    line,
                    message: format!("row has {} entries, header names {} elements", entries.len(), labels.len()),
                });
            }
            let row = entries
                .iter()
                .map(|c| match c {
                    '0' => Ok(0u8),
                    '1' => Ok(1u8),
                    _ => Err(MatroidError::Parse { line, message: format!("unexpected `{c}`") }),
                })
                .collect::<Result<Vec<u8>, _>>()?;
            rows.push(row);
        }
        Self::new(labels.clone(), BitMatrix::from_rows(&rows, labels.len()))
    }
}

impl fmt::Display for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.labels.join(" "))?;
        for r in 0..self.rep.rows() {
            let row: Vec<&str> = (0..self.len()).map(|c| if self.rep.get(r, c) { "1" } else { "0" }).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatroid({})", self.to_string().trim_end().replace('\n', "; "))
    }
}

impl FromStr for BinaryMatroid {
    type Err = MatroidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Vertex-edge incidence representation; edge `u v` is labeled `u-v`.
pub fn cycle_matroid(g: &Graph) -> BinaryMatroid {
    let edges = g.edges();
    let mut rep = BitMatrix::zeros(g.n(), edges.len());
    let mut labels = Vec::with_capacity(edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        rep.set(u, j, true);
        rep.set(v, j, true);
        labels.push(format!("{}-{}", g.label(u), g.label(v)));
    }
    BinaryMatroid::new(labels, rep).expect("incidence matrix of a graph")
}

/// Rank-depth of the connectivity function.
pub fn branch_depth(m: &BinaryMatroid) -> Result<DepthResult, MatroidError> {
    Ok(rank_depth_of(&m.connectivity_system(), BRANCH_DEPTH_MAX_ELEMENTS)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidMinorSearch {
    Found { delete: Vec<String>, contract: Vec<String> },
    NotFound,
    Inconclusive { reason: String },
}

impl MatroidMinorSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, MatroidMinorSearch::Found { .. })
    }

    pub fn decided(&self) -> Option<bool> {
        match self {
            MatroidMinorSearch::Found { .. } => Some(true),
            MatroidMinorSearch::NotFound => Some(false),
            MatroidMinorSearch::Inconclusive { .. } => None,
        }
    }
}

pub fn has_matroid_minor(m: &BinaryMatroid, n: &BinaryMatroid) -> Result<MatroidMinorSearch, MatroidError> {
    has_matroid_minor_with(m, n, Execution::default())
}

/// Tries every delete/contract split of every set of surplus elements.
pub fn has_matroid_minor_with(m: &BinaryMatroid, n: &BinaryMatroid, exec: Execution) -> Result<MatroidMinorSearch, MatroidError> {
    if m.len() > MINOR_SEARCH_MAX_ELEMENTS {
        return Ok(MatroidMinorSearch::Inconclusive {
            reason: format!("{} elements exceed the exact search limit of {MINOR_SEARCH_MAX_ELEMENTS}", m.len()),
        });
    }
    if n.len() > m.len() || n.rank() > m.rank() || m.len() - n.len() < m.rank() - n.rank() {
        return Ok(MatroidMinorSearch::NotFound);
    }
    check_canon_size(n.len())?;
    let targets = n.all_basis_keys()?;
    let surplus = subsets_of_size(m.ground(), m.len() - n.len());
    let contract_rank = m.rank() - n.rank();
    let probe = |&removed: &u64| -> Option<(u64, u64)> {
        let mut sub = removed;
        loop {
            let contract = sub;
            if m.rank_of(contract) == contract_rank {
                if let Ok(minor) = m.minor(removed & !contract, contract) {
                    if minor.rank() == n.rank() && matches!(minor.basis_key(minor.some_basis()), Ok(k) if targets.contains(&k)) {
                        return Some((removed & !contract, contract));
                    }
                }
            }
            if sub == 0 {
                return None;
            }
            sub = (sub - 1) & removed;
        }
    };
    let hit = exec.position_first(&surplus, |r| probe(r).is_some()).and_then(|i| probe(&surplus[i]));
    Ok(match hit {
        Some((delete, contract)) => MatroidMinorSearch::Found {
            delete: members(delete).map(|e| m.labels[e].clone()).collect(),
            contract: members(contract).map(|e| m.labels[e].clone()).collect(),
        },
        None => MatroidMinorSearch::NotFound,
    })
}

fn check_canon_size(n: usize) -> Result<(), MatroidError> {
    if n > CANON_MAX_VERTICES {
        Err(MatroidError::TooLarge { what: "element count for isomorphism", size: n, cap: CANON_MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// All `k`-subsets of `set`, in increasing mask order.
fn subsets_of_size(set: u64, k: usize) -> Vec<u64> {
    let elems: Vec<usize> = members(set).collect();
    if k > elems.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        out.push(pick.iter().fold(0u64, |m, &i| m | 1 << elems[i]));
        let Some(i) = (0..k).rev().find(|&i| pick[i] < elems.len() - k + i) else {
            break;
        };
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
    out.sort_unstable();
    out
}

/// Cycle matroid of the fan with a path on `t` vertices.
pub fn fan_matroid(t: usize) -> BinaryMatroid {
    cycle_matroid(&crate::graph::generate("fan", &[t]).expect("fan size within limits"))
}

/// The spokes of [`fan_matroid`], a basis whose fundamental graph is a path.
pub fn fan_spokes(m: &BinaryMatroid, t: usize) -> u64 {
    let hub = t.to_string();
    m.labels
        .iter()
        .enumerate()
        .filter(|(_, l)| l.split('-').any(|x| x == hub))
        .fold(0, |s, (e, _)| s | 1 << e)
}
