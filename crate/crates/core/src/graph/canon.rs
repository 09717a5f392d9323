//! Canonical labeling by individualization and refinement.
//!
//! The canonical code is the lexicographically largest upper-triangle
//! adjacency string over all leaves of the search tree. Branches on twin
//! vertices are skipped: swapping two twins in the same cell is an
//! automorphism fixing every individualized vertex, so their subtrees yield
//! the same codes.

use std::hash::{Hash, Hasher};

use super::{members, Graph, GraphError};

/// Graphs above this size are refused rather than canonized.
pub const CANON_MAX_VERTICES: usize = 12;

/// Hard limit of the code width (upper triangle must fit in 128 bits).
const CODE_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: u8,
    marked: u8,
    code: u128,
}

impl CanonKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u128 {
        self.code
    }
}

/// A canonical form: equal keys iff isomorphic graphs.
#[derive(Debug, Clone)]
pub struct CanonicalGraph {
    key: CanonKey,
    relabeling: Vec<usize>,
}

impl CanonicalGraph {
    pub fn key(&self) -> CanonKey {
        self.key
    }

    /// `relabeling()[i]` is the original vertex placed at canonical position `i`.
    pub fn relabeling(&self) -> &[usize] {
        &self.relabeling
    }

    /// The canonical graph itself, labeled `0..n` by canonical position.
    pub fn graph(&self) -> Graph {
        let n = self.key.n();
        let mut g = Graph::empty(n);
        let mut bit = n * n.saturating_sub(1) / 2;
        for i in 0..n {
            for j in i + 1..n {
                bit -= 1;
                if (self.key.code >> bit) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl PartialEq for CanonicalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for CanonicalGraph {}

impl Hash for CanonicalGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph, GraphError> {
    check_size(g.n())?;
    Ok(canonize(g.adjacency(), 0))
}

/// Canonical form respecting a vertex marking: isomorphisms must map marked
/// vertices to marked vertices.
pub fn canonical_form_colored(g: &Graph, marked: u64) -> Result<CanonicalGraph, GraphError> {
    check_size(g.n())?;
    Ok(canonize(g.adjacency(), marked & g.all_vertices()))
}

fn check_size(n: usize) -> Result<(), GraphError> {
    if n > CANON_MAX_VERTICES {
        Err(GraphError::TooLarge { n, cap: CANON_MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// Key only, for hot loops over raw adjacency rows.
pub(crate) fn canonical_key(adj: &[u64]) -> CanonKey {
    canonize(adj, 0).key
}

pub(crate) fn canonize(adj: &[u64], marked: u64) -> CanonicalGraph {
    let n = adj.len();
    assert!(n <= CODE_MAX_VERTICES);
    if n == 0 {
        return CanonicalGraph {
            key: CanonKey { n: 0, marked: 0, code: 0 },
            relabeling: Vec::new(),
        };
    }
    let all = crate::bitmatrix::low_mask(n);
    let mut cells: Vec<u64> = Vec::with_capacity(n);
    if marked != 0 {
        cells.push(marked);
    }
    if all & !marked != 0 {
        cells.push(all & !marked);
    }
    let mut search = Search { adj, n, best: None };
    search.descend(cells);
    let (code, order) = search.best.expect("search reaches at least one leaf");
    CanonicalGraph {
        key: CanonKey {
            n: n as u8,
            marked: marked.count_ones() as u8,
            code,
        },
        relabeling: order,
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u64>) {
        refine(self.adj, &mut cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let target = cells.iter().position(|c| c.count_ones() > 1).unwrap();
        let cell = cells[target];
        let mut tried: u64 = 0;
        for v in members(cell) {
            if members(tried).any(|u| self.twins(u, v)) {
                continue;
            }
            tried |= 1 << v;
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(next);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let both = !((1u64 << u) | (1u64 << v));
        self.adj[u] & both == self.adj[v] & both
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut code: u128 = 0;
        for i in 0..self.n {
            let row = self.adj[order[i]];
            for &w in &order[i + 1..] {
                code = (code << 1) | ((row >> w) & 1) as u128;
            }
        }
        match &self.best {
            Some((b, _)) if *b >= code => {}
            _ => self.best = Some((code, order)),
        }
    }
}

/// Refines an ordered partition until every vertex in a cell has the same
/// number of neighbors in every cell. Split cells are ordered by their
/// neighbor-count signature, so the result depends only on structure.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    loop {
        let mut next: Vec<u64> = Vec::with_capacity(adj.len());
        let mut changed = false;
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut sigs: Vec<(u128, usize)> = members(cell)
                .map(|v| {
                    let mut sig: u128 = 0;
                    for &c in cells.iter() {
                        sig = (sig << 5) | (adj[v] & c).count_ones() as u128;
                    }
                    (sig, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    let part = sigs[start..i].iter().fold(0u64, |m, &(_, v)| m | (1 << v));
                    next.push(part);
                    start = i;
                }
            }
            if next.last() != Some(&cell) {
                changed = true;
            }
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// True when the two graphs are isomorphic. Exact up to
/// [`CANON_MAX_VERTICES`] vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        check_size(g.n().max(h.n()))?;
        return Ok(false);
    }
    Ok(canonical_form(g)?.key == canonical_form(h)?.key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_labeled_graphs, generate};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        let mut h = Graph::empty(g.n());
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        if g.n() != h.n() || g.edge_count() != h.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..g.n()).collect();
        loop {
            if g.edges().iter().all(|&(u, v)| h.has_edge(perm[u], perm[v])) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        if p.len() < 2 {
            return false;
        }
        let mut i = p.len() - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = p.len() - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn examples() {
        let p4 = generate("path", &[4]).unwrap();
        let relabeled = permuted(&p4, &[2, 0, 3, 1]);
        assert!(is_isomorphic(&p4, &relabeled).unwrap());
        assert!(!is_isomorphic(&p4, &generate("star", &[3]).unwrap()).unwrap());
        let c5 = generate("cycle", &[5]).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn canonical_graph_round_trips() {
        let g = generate("bull", &[]).unwrap();
        let c = canonical_form(&g).unwrap();
        let h = c.graph();
        assert_eq!(canonical_form(&h).unwrap().key(), c.key());
        for (i, &v) in c.relabeling().iter().enumerate() {
            for (j, &w) in c.relabeling().iter().enumerate() {
                if i != j {
                    assert_eq!(h.has_edge(i, j), g.has_edge(v, w));
                }
            }
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // every pair of labeled graphs on 4 vertices, and sampled pairs on 5 and 6
        let four = all_labeled_graphs(4);
        for g in &four {
            for h in &four {
                assert_eq!(is_isomorphic(g, h).unwrap(), brute_isomorphic(g, h));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 5..=6 {
            let graphs = all_labeled_graphs(n);
            for _ in 0..2000 {
                let g = graphs.choose(&mut rng).unwrap();
                let h = if rng.gen_bool(0.5) {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.shuffle(&mut rng);
                    permuted(g, &perm)
                } else {
                    graphs.choose(&mut rng).unwrap().clone()
                };
                assert_eq!(is_isomorphic(g, &h).unwrap(), brute_isomorphic(g, &h));
            }
        }
    }

    #[test]
    fn matches_brute_force_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let n = rng.gen_range(7..=8);
            let g = random_graph(&mut rng, n, 0.5);
            let h = if rng.gen_bool(0.5) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let mut h = permuted(&g, &perm);
                // occasionally flip one edge so degree sequences can still agree
                if rng.gen_bool(0.3) {
                    let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    if u != v {
                        if h.has_edge(u, v) {
                            h.remove_edge(u, v)
                        } else {
                            h.add_edge(u, v)
                        }
                    }
                }
                h
            } else {
                random_graph(&mut rng, n, 0.5)
            };
            assert_eq!(is_isomorphic(&g, &h).unwrap(), brute_isomorphic(&g, &h));
        }
    }

    #[test]
    fn symmetric_graphs_stay_fast() {
        for g in [
            Graph::empty(12),
            generate("complete", &[12]).unwrap(),
            generate("cycle", &[12]).unwrap(),
            generate("half_graph", &[1, 1, 6]).unwrap(),
        ] {
            let c = canonical_form(&g).unwrap();
            assert_eq!(c.relabeling().len(), 12);
        }
    }

    #[test]
    fn colored_forms_respect_marking() {
        // P3 with an end marked vs the center marked
        let p3 = generate("path", &[3]).unwrap();
        let end = canonical_form_colored(&p3, 0b001).unwrap();
        let other_end = canonical_form_colored(&p3, 0b100).unwrap();
        let center = canonical_form_colored(&p3, 0b010).unwrap();
        assert_eq!(end, other_end);
        assert_ne!(end, center);
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(canonical_form(&Graph::empty(13)).is_err());
    }
}
