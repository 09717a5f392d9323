//! Named graph families.
//!
//! Labelings are fixed: vertices are labeled `0..n` and
//!
//! * `path n`: path order `0 - 1 - ... - n-1`
//! * `cycle n`: cyclic order
//! * `star n`: `K_{1,n}` with the center at `0`
//! * `fan t`: path `0..t` plus hub `t` adjacent to every path vertex
//! * `bull`: triangle `0 1 2`, pendants `3` on `0` and `4` on `1`
//! * `w4`: 4-cycle `0 1 2 3` plus hub `4`
//! * `bw3c`: triangles `0 1 2` and `3 4 5`, matching `0-3 1-4 2-5`, apex `6`
//!   on `3 4 5`
//! * `n_graph`: triangle `0 1 2` with pendants `3 4 5` on `0 1 2`
//! * `q_graph`: 4-cycle `0 1 2 3` with pendants `4` on `1` and `5` on `3`
//! * `half_graph a b n`: `X_n ▽ Y_n` where `a`, `b` select edgeless (0) or
//!   complete (1) sides; `v_i` is vertex `i - 1`, `w_j` is vertex `n + j - 1`

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Complete,
    Edgeless,
    Cycle,
    Star,
    Fan,
    Bull,
    W4,
    Bw3Complement,
    C5,
    NGraph,
    QGraph,
    HalfGraph,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Path,
        Family::Complete,
        Family::Edgeless,
        Family::Cycle,
        Family::Star,
        Family::Fan,
        Family::Bull,
        Family::W4,
        Family::Bw3Complement,
        Family::C5,
        Family::NGraph,
        Family::QGraph,
        Family::HalfGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Edgeless => "edgeless",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Fan => "fan",
            Family::Bull => "bull",
            Family::W4 => "w4",
            Family::Bw3Complement => "bw3c",
            Family::C5 => "c5",
            Family::NGraph => "n_graph",
            Family::QGraph => "q_graph",
            Family::HalfGraph => "half_graph",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Path | Family::Complete | Family::Edgeless | Family::Cycle | Family::Star | Family::Fan => 1,
            Family::HalfGraph => 3,
            _ => 0,
        }
    }

    pub fn build(self, params: &[usize]) -> Result<Graph, GraphError> {
        let fail = |reason: String| GraphError::Generation { family: self.name().to_string(), reason };
        if params.len() != self.arity() {
            return Err(fail(format!("expected {} parameter(s), got {}", self.arity(), params.len())));
        }
        let size = |min: usize, max: usize| -> Result<usize, GraphError> {
            let n = params[0];
            if n < min || n > max {
                Err(fail(format!("size {n} outside {min}..={max}")))
            } else {
                Ok(n)
            }
        };
        let g = match self {
            Family::Path => {
                let n = size(1, 64)?;
                Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
            }
            Family::Complete => complete(size(0, 64)?),
            Family::Edgeless => Graph::empty(size(0, 64)?),
            Family::Cycle => cycle(size(3, 64)?),
            Family::Star => {
                let n = size(0, 63)?;
                Graph::from_edges(n + 1, &(1..=n).map(|i| (0, i)).collect::<Vec<_>>())
            }
            Family::Fan => {
                let t = size(1, 63)?;
                let mut edges: Vec<_> = (1..t).map(|i| (i - 1, i)).collect();
                edges.extend((0..t).map(|i| (i, t)));
                Graph::from_edges(t + 1, &edges)
            }
            Family::Bull => Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
            Family::W4 => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)]),
            Family::Bw3Complement => Graph::from_edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                    (3, 6),
                    (4, 6),
                    (5, 6),
                ],
            ),
            Family::C5 => cycle(5),
            Family::NGraph => Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
            Family::QGraph => Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (3, 5)]),
            Family::HalfGraph => {
                let side = |code: usize| match code {
                    0 => Ok(HalfSide::Edgeless),
                    1 => Ok(HalfSide::Complete),
                    c => Err(fail(format!("side code {c} is not 0 (edgeless) or 1 (complete)"))),
                };
                let (a, b, n) = (side(params[0])?, side(params[1])?, params[2]);
                if n == 0 || n > 32 {
                    return Err(fail(format!("size {n} outside 1..=32")));
                }
                let (g, h) = (a.graph(n), b.graph(n));
                let order: Vec<usize> = (0..n).collect();
                half_graph(&g, &h, &order, &order)?
            }
        };
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == lower)
            .ok_or_else(|| GraphError::Generation {
                family: s.to_string(),
                reason: "unknown family".to_string(),
            })
    }
}

/// Side of a half-graph built from a named family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfSide {
    Edgeless,
    Complete,
}

impl HalfSide {
    pub fn graph(self, n: usize) -> Graph {
        match self {
            HalfSide::Edgeless => Graph::empty(n),
            HalfSide::Complete => complete(n),
        }
    }
}

/// Generates a named family member, e.g. `generate("fan", &[5])`.
pub fn generate(family: &str, params: &[usize]) -> Result<Graph, GraphError> {
    family.parse::<Family>()?.build(params)
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

/// `G ▽ H`: disjoint union where `v_i w_j` is an edge exactly when `i >= j`,
/// with `v_i = ord_g[i]` and `w_j = ord_h[j]`. Vertices `0..n` of the result
/// are `v_1..v_n`, vertices `n..2n` are `w_1..w_n`.
pub fn half_graph(g: &Graph, h: &Graph, ord_g: &[usize], ord_h: &[usize]) -> Result<Graph, GraphError> {
    let n = g.n();
    if h.n() != n {
        return Err(GraphError::Composition(format!("sides have {} and {} vertices", n, h.n())));
    }
    if 2 * n > super::MAX_VERTICES {
        return Err(GraphError::TooLarge { n: 2 * n, cap: super::MAX_VERTICES });
    }
    for (ord, side) in [(ord_g, "first"), (ord_h, "second")] {
        let mut seen = 0u64;
        for &v in ord {
            if v >= n {
                return Err(GraphError::Composition(format!("{side} order names vertex {v}")));
            }
            seen |= 1 << v;
        }
        if ord.len() != n || seen.count_ones() as usize != n {
            return Err(GraphError::Composition(format!("{side} order is not a permutation")));
        }
    }
    let mut out = Graph::empty(2 * n);
    for i in 0..n {
        for j in 0..n {
            if i < j && g.has_edge(ord_g[i], ord_g[j]) {
                out.add_edge(i, j);
            }
            if i < j && h.has_edge(ord_h[i], ord_h[j]) {
                out.add_edge(n + i, n + j);
            }
            if i >= j {
                out.add_edge(i, n + j);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn path_and_fan_shapes() {
        let p4 = generate("path", &[4]).unwrap();
        assert_eq!((p4.n(), p4.edge_count()), (4, 3));
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);
        let f5 = generate("fan", &[5]).unwrap();
        assert_eq!((f5.n(), f5.edge_count()), (6, 9));
        assert_eq!(f5.degree(5), 5);
    }

    #[test]
    fn q_graph_is_a_square_with_opposite_pendants() {
        let q = generate("q_graph", &[]).unwrap();
        assert_eq!((q.n(), q.edge_count()), (6, 6));
        assert_eq!(q.degree_sequence(), vec![1, 1, 2, 2, 3, 3]);
        // the two degree-3 vertices are not adjacent
        assert!(!q.has_edge(1, 3));
    }

    #[test]
    fn fixed_obstructions() {
        let bull = generate("bull", &[]).unwrap();
        assert_eq!(bull.degree_sequence(), vec![1, 1, 2, 3, 3]);
        let w4 = generate("w4", &[]).unwrap();
        assert_eq!(w4.degree_sequence(), vec![3, 3, 3, 3, 4]);
        let bw = generate("bw3c", &[]).unwrap();
        assert_eq!((bw.n(), bw.edge_count()), (7, 12));
        let net = generate("n_graph", &[]).unwrap();
        assert_eq!(net.degree_sequence(), vec![1, 1, 1, 3, 3, 3]);
        assert!(is_isomorphic(&generate("c5", &[]).unwrap(), &generate("cycle", &[5]).unwrap()).unwrap());
    }

    #[test]
    fn half_graph_examples() {
        let s1 = Graph::empty(1);
        let k2 = half_graph(&s1, &s1, &[0], &[0]).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);

        let s2 = generate("half_graph", &[0, 0, 2]).unwrap();
        // v1 w1, v2 w1, v2 w2
        assert_eq!(s2.edges(), vec![(0, 2), (1, 2), (1, 3)]);
        assert!(is_isomorphic(&s2, &generate("path", &[4]).unwrap()).unwrap());

        let k4k4 = generate("half_graph", &[1, 1, 4]).unwrap();
        assert_eq!((k4k4.n(), k4k4.edge_count()), (8, 22));
    }

    #[test]
    fn half_graph_restricts_to_its_sides() {
        let g = generate("path", &[4]).unwrap();
        let h = generate("star", &[3]).unwrap();
        let ord_g = [2, 0, 3, 1];
        let ord_h = [1, 3, 0, 2];
        let out = half_graph(&g, &h, &ord_g, &ord_h).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(out.has_edge(i, j), g.has_edge(ord_g[i], ord_g[j]));
                    assert_eq!(out.has_edge(4 + i, 4 + j), h.has_edge(ord_h[i], ord_h[j]));
                }
                assert_eq!(out.has_edge(i, 4 + j), i >= j);
            }
        }
    }

    #[test]
    fn errors() {
        assert!(generate("petersen", &[]).is_err());
        assert!(generate("path", &[0]).is_err());
        assert!(generate("cycle", &[2]).is_err());
        assert!(matches!(
            half_graph(&Graph::empty(2), &Graph::empty(3), &[0, 1], &[0, 1, 2]),
            Err(GraphError::Composition(_))
        ));
    }
}
