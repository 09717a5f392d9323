//! Trees whose leaves are in bijection with a ground set.
//!
//! The text form is nested parentheses rooted at a center of the tree, e.g.
//! `((0,1),(2,3),4)`. A labeled node is a leaf of the tree; the one exception
//! is a two-leaf tree, written `(b)a` (the root `a` with its single child).

use std::collections::VecDeque;
use std::fmt::Write as _;

use super::{ConnectivitySystem, WidthError};

/// Node degree beyond which `node_width` refuses to enumerate part unions.
pub const DEFAULT_DEGREE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    adj: Vec<Vec<usize>>,
    leaf_of: Vec<usize>,
}

impl Decomposition {
    /// Validates and wraps a tree. `leaf_of[e]` is the tree node holding
    /// ground element `e`.
    pub fn new(adj: Vec<Vec<usize>>, leaf_of: Vec<usize>) -> Result<Self, WidthError> {
        let bad = |m: &str| Err(WidthError::InvalidDecomposition(m.to_string()));
        let nodes = adj.len();
        if leaf_of.len() < 2 {
            return bad("a decomposition needs at least two ground elements");
        }
        let edge_ends: usize = adj.iter().map(Vec::len).sum();
        if edge_ends != 2 * (nodes - 1) {
            return bad("tree must have exactly one edge fewer than nodes");
        }
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                if v >= nodes || v == u || !adj[v].contains(&u) {
                    return bad("adjacency lists are not symmetric");
                }
            }
        }
        let mut seen = vec![false; nodes];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        if reached != nodes {
            return bad("tree is disconnected");
        }
        let mut holder = vec![None; nodes];
        for (e, &node) in leaf_of.iter().enumerate() {
            if node >= nodes || holder[node].is_some() {
                return bad("leaf assignment is not injective");
            }
            holder[node] = Some(e);
        }
        for (u, nbrs) in adj.iter().enumerate() {
            if (nbrs.len() <= 1) != holder[u].is_some() {
                return bad("ground elements must sit exactly on the leaves");
            }
        }
        Ok(Decomposition { adj, leaf_of })
    }

    /// One center joined to every element.
    pub fn star(n: usize) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for e in 0..n {
            adj[e].push(n);
            adj[n].push(e);
        }
        Decomposition::new(adj, (0..n).collect()).expect("star is a valid decomposition")
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn ground_size(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.adj[node].len() <= 1
    }

    pub fn leaf_of(&self, element: usize) -> usize {
        self.leaf_of[element]
    }

    pub fn element_at(&self, node: usize) -> Option<usize> {
        self.leaf_of.iter().position(|&x| x == node)
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).filter(|&u| !self.is_leaf(u))
    }

    fn element_masks(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.node_count()];
        for (e, &node) in self.leaf_of.iter().enumerate() {
            m[node] |= 1 << e;
        }
        m
    }

    /// Ground elements on the `toward` side of the edge `from - toward`.
    pub fn side(&self, from: usize, toward: usize) -> u64 {
        let masks = self.element_masks();
        self.side_with(&masks, from, toward)
    }

    fn side_with(&self, masks: &[u64], from: usize, toward: usize) -> u64 {
        let mut acc = 0;
        let mut stack = vec![(toward, from)];
        while let Some((u, parent)) = stack.pop() {
            acc |= masks[u];
            for &v in &self.adj[u] {
                if v != parent {
                    stack.push((v, u));
                }
            }
        }
        acc
    }

    /// The partition of the ground set induced by deleting `node`.
    pub fn parts_at(&self, node: usize) -> Vec<u64> {
        let masks = self.element_masks();
        self.adj[node].iter().map(|&v| self.side_with(&masks, node, v)).collect()
    }

    /// Maximum connectivity over unions of the parts at a non-leaf node.
    pub fn node_width(&self, node: usize, sys: &ConnectivitySystem) -> Result<usize, WidthError> {
        self.node_width_capped(node, sys, DEFAULT_DEGREE_CAP)
    }

    pub fn node_width_capped(&self, node: usize, sys: &ConnectivitySystem, degree_cap: usize) -> Result<usize, WidthError> {
        if node >= self.node_count() || self.is_leaf(node) {
            return Err(WidthError::InvalidNode(node));
        }
        let parts = self.parts_at(node);
        if parts.len() > degree_cap {
            return Err(WidthError::Budget {
                what: "node degree",
                size: parts.len(),
                cap: degree_cap,
            });
        }
        Ok(max_over_unions(&parts, sys))
    }

    /// Maximum node width over non-leaf nodes (zero when there are none).
    pub fn width(&self, sys: &ConnectivitySystem) -> Result<usize, WidthError> {
        self.internal_nodes().try_fold(0, |w, u| Ok(w.max(self.node_width(u, sys)?)))
    }

    pub fn eccentricity(&self, node: usize) -> usize {
        let mut dist = vec![usize::MAX; self.node_count()];
        dist[node] = 0;
        let mut queue = VecDeque::from([node]);
        let mut far = 0;
        while let Some(u) = queue.pop_front() {
            far = far.max(dist[u]);
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        far
    }

    /// Smallest-index node of minimum eccentricity.
    pub fn center(&self) -> usize {
        (0..self.node_count()).min_by_key(|&u| (self.eccentricity(u), u)).unwrap()
    }

    pub fn radius(&self) -> usize {
        self.eccentricity(self.center())
    }

    /// Nested-parenthesis text rooted at the center.
    pub fn to_text(&self, labels: &[String]) -> String {
        let mut root = self.center();
        if self.is_leaf(root) && self.node_count() > 2 {
            root = self.adj[root][0];
        }
        let mut out = String::new();
        if self.is_leaf(root) {
            // two-leaf tree
            let other = self.adj[root][0];
            let _ = write!(out, "({}){}", labels[self.element_at(other).unwrap()], labels[self.element_at(root).unwrap()]);
            return out;
        }
        self.write_node(root, usize::MAX, labels, &mut out);
        out
    }

    fn write_node(&self, u: usize, parent: usize, labels: &[String], out: &mut String) {
        if let Some(e) = self.element_at(u) {
            out.push_str(&labels[e]);
            return;
        }
        out.push('(');
        let mut first = true;
        for &v in &self.adj[u] {
            if v == parent {
                continue;
            }
            if !first {
                out.push(',');
            }
            first = false;
            self.write_node(v, u, labels, out);
        }
        out.push(')');
    }

    /// Parses the nested-parenthesis form against a list of element labels.
    pub fn parse(text: &str, labels: &[String]) -> Result<Self, WidthError> {
        let mut p = TreeParser {
            bytes: text.trim().as_bytes(),
            pos: 0,
            adj: Vec::new(),
            leaf_of: vec![usize::MAX; labels.len()],
            labels,
        };
        let root = p.node()?;
        if p.pos < p.bytes.len() && !matches!(p.bytes[p.pos], b'(' | b')' | b',') {
            // `(child)label`: the root itself is a leaf
            let e = p.label()?;
            p.assign(root, e)?;
        }
        if p.pos != p.bytes.len() {
            return Err(p.err("trailing input"));
        }
        if let Some(e) = p.leaf_of.iter().position(|&x| x == usize::MAX) {
            return Err(WidthError::Parse {
                offset: p.pos,
                message: format!("element `{}` does not appear", labels[e]),
            });
        }
        Decomposition::new(p.adj, p.leaf_of)
    }
}

/// Maximum of `f` over all unions of `parts`; by symmetry the last part can
/// be left out of every union.
fn max_over_unions(parts: &[u64], sys: &ConnectivitySystem) -> usize {
    if parts.len() < 2 {
        return parts.first().map_or(0, |&p| sys.value(p));
    }
    let free = &parts[..parts.len() - 1];
    let mut best = 0;
    for pick in 1..1u64 << free.len() {
        let mut u = 0;
        for (i, &p) in free.iter().enumerate() {
            if (pick >> i) & 1 == 1 {
                u |= p;
            }
        }
        best = best.max(sys.value(u));
    }
    best
}

struct TreeParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    adj: Vec<Vec<usize>>,
    leaf_of: Vec<usize>,
    labels: &'a [String],
}

impl TreeParser<'_> {
    fn err(&self, message: &str) -> WidthError {
        WidthError::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn new_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    fn assign(&mut self, node: usize, e: usize) -> Result<(), WidthError> {
        if self.leaf_of[e] != usize::MAX {
            return Err(self.err(&format!("element `{}` appears twice", self.labels[e])));
        }
        self.leaf_of[e] = node;
        Ok(())
    }

    fn label(&mut self) -> Result<usize, WidthError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && !matches!(self.bytes[self.pos], b'(' | b')' | b',') && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.bytes[start..self.pos]).map_err(|_| self.err("invalid UTF-8"))?;
        if word.is_empty() {
            return Err(self.err("expected a label or `(`"));
        }
        self.labels
            .iter()
            .position(|l| l == word)
            .ok_or_else(|| WidthError::Parse { offset: start, message: format!("unknown label `{word}`") })
    }

    fn node(&mut self) -> Result<usize, WidthError> {
        self.skip_ws();
        let id = self.new_node();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == b'(' {
            self.pos += 1;
            loop {
                let child = self.node()?;
                self.adj[id].push(child);
                self.adj[child].push(id);
                self.skip_ws();
                match self.bytes.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected `,` or `)`")),
                }
            }
        } else {
            let e = self.label()?;
            self.assign(id, e)?;
        }
        self.skip_ws();
        Ok(id)
    }
}

/// A decomposition whose tree has every node of degree one or three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDecomposition(Decomposition);

impl RankDecomposition {
    pub fn new(d: Decomposition) -> Result<Self, WidthError> {
        if (0..d.node_count()).any(|u| !matches!(d.neighbors(u).len(), 1 | 3)) {
            return Err(WidthError::InvalidDecomposition("rank-decomposition nodes must have degree 1 or 3".into()));
        }
        Ok(RankDecomposition(d))
    }

    pub fn tree(&self) -> &Decomposition {
        &self.0
    }

    /// Tree edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let d = &self.0;
        (0..d.node_count()).flat_map(|u| d.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v))).collect()
    }

    pub fn edge_width(&self, u: usize, v: usize, sys: &ConnectivitySystem) -> usize {
        sys.value(self.0.side(u, v))
    }

    /// Maximum edge width.
    pub fn width(&self, sys: &ConnectivitySystem) -> usize {
        self.edges().into_iter().map(|(u, v)| self.edge_width(u, v, sys)).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn sys(name: &str, p: &[usize]) -> ConnectivitySystem {
        ConnectivitySystem::cut_rank(&generate(name, p).unwrap()).tabulated()
    }

    #[test]
    fn node_width_examples() {
        let s = sys("edgeless", &[4]);
        let star = Decomposition::star(4);
        assert_eq!(star.node_width(4, &s).unwrap(), 0);

        let k2 = sys("complete", &[2]);
        assert_eq!(Decomposition::star(2).node_width(2, &k2).unwrap(), 1);

        let p4 = sys("path", &[4]);
        let star = Decomposition::star(4);
        assert_eq!(star.node_width(4, &p4).unwrap(), 2);
        assert_eq!(star.width(&p4).unwrap(), 2);
        assert_eq!(star.radius(), 1);
        assert_eq!(star.node_width(0, &p4), Err(WidthError::InvalidNode(0)));

        let k5 = sys("complete", &[5]);
        let star = Decomposition::star(5);
        assert_eq!((star.width(&k5).unwrap(), star.radius()), (1, 1));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let s = sys("edgeless", &[6]);
        let star = Decomposition::star(6);
        assert!(matches!(star.node_width_capped(6, &s, 5), Err(WidthError::Budget { .. })));
    }

    #[test]
    fn radius_of_a_path_shaped_tree() {
        // leaves 0,1 on node 4; leaves 2,3 on node 5; 4 - 5
        let adj = vec![vec![4], vec![4], vec![5], vec![5], vec![0, 1, 5], vec![2, 3, 4]];
        let d = Decomposition::new(adj, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(d.radius(), 2);
        assert!(d.radius() >= 1);
    }

    #[test]
    fn rejects_malformed_trees() {
        // element on an internal node
        let adj = vec![vec![2], vec![2], vec![0, 1, 3], vec![2]];
        assert!(Decomposition::new(adj, vec![0, 2, 1]).is_err());
        // cycle
        let adj = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        assert!(Decomposition::new(adj, vec![0, 1]).is_err());
        // unassigned leaf
        let adj = vec![vec![3], vec![3], vec![3], vec![0, 1, 2]];
        assert!(Decomposition::new(adj, vec![0, 1]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let labels: Vec<String> = ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect();
        let d = Decomposition::parse("((a,b),(c,d),e)", &labels).unwrap();
        assert_eq!(d.node_count(), 8);
        assert_eq!(d.radius(), 2);
        let again = Decomposition::parse(&d.to_text(&labels), &labels).unwrap();
        assert_eq!(again.radius(), d.radius());
        let s = ConnectivitySystem::cut_rank(&generate("path", &[5]).unwrap());
        assert_eq!(again.width(&s).unwrap(), d.width(&s).unwrap());

        let two = Decomposition::parse("(b)a", &labels[..2]).unwrap();
        assert_eq!(two.node_count(), 2);
        assert_eq!(two.to_text(&labels[..2]), "(b)a");

        assert!(Decomposition::parse("((a,b),c", &labels[..3]).is_err());
        assert!(Decomposition::parse("(a,b,z)", &labels[..3]).is_err());
        assert!(Decomposition::parse("(a,b)", &labels[..3]).is_err());
        assert!(Decomposition::parse("(a,a,b)", &labels[..2]).is_err());
    }

    #[test]
    fn rank_decomposition_degrees() {
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let cubic = Decomposition::parse("((0,1),2,3)", &labels).unwrap();
        let rd = RankDecomposition::new(cubic).unwrap();
        let p4 = sys("path", &[4]);
        assert_eq!(rd.width(&p4), 1);
        assert_eq!(rd.edges().len(), 5);
        assert!(RankDecomposition::new(Decomposition::star(4)).is_err());
    }
}
