//! Brute-force reference implementations for cross-checking the exact
//! engines on small inputs. Deliberately unoptimised and sharing no code
//! with them beyond the `Graph` type.

use std::collections::{BTreeSet, HashSet};

use crate::graph::Graph;

/// GF(2) rank by textbook elimination on a dense byte matrix.
pub fn naive_rank(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|x| x & 1).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn naive_cut_rank(g: &Graph, set: &[bool]) -> usize {
    let n = g.n();
    let rows: Vec<Vec<u8>> = (0..n)
        .filter(|&u| set[u])
        .map(|u| (0..n).filter(|&v| !set[v]).map(|v| g.has_edge(u, v) as u8).collect())
        .collect();
    naive_rank(&rows)
}

fn cut_of(g: &Graph, side: &BTreeSet<usize>) -> usize {
    let set: Vec<bool> = (0..g.n()).map(|v| side.contains(&v)).collect();
    naive_cut_rank(g, &set)
}

/// Minimum over orderings of the largest prefix cut-rank.
pub fn naive_linear_rank_width(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    loop {
        let mut prefix = BTreeSet::new();
        let mut w = 0;
        for &v in &perm[..n - 1] {
            prefix.insert(v);
            w = w.max(cut_of(g, &prefix));
        }
        best = best.min(w);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

type Tree = Vec<Vec<usize>>;

/// Leaves (0..n) on one side of edge `u -> v`, taken on the `v` side.
fn leaves_beyond(t: &Tree, n: usize, u: usize, v: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut stack = vec![(v, u)];
    while let Some((x, parent)) = stack.pop() {
        if x < n {
            out.insert(x);
        }
        for &y in &t[x] {
            if y != parent {
                stack.push((y, x));
            }
        }
    }
    out
}

/// All cubic trees with leaves `0..n`, built by inserting one leaf at a time
/// on every edge.
fn cubic_trees(n: usize) -> Vec<Tree> {
    assert!(n >= 3);
    let mut start: Tree = vec![Vec::new(); n + 1];
    let hub = n;
    for leaf in 0..3 {
        start[leaf].push(hub);
        start[hub].push(leaf);
    }
    let mut trees = vec![start];
    for leaf in 3..n {
        let mut next = Vec::new();
        for t in &trees {
            for u in 0..t.len() {
                for &v in &t[u] {
                    if u < v {
                        let mut s = t.clone();
                        let mid = s.len();
                        s.push(vec![u, v, leaf]);
                        s[u].retain(|&x| x != v);
                        s[u].push(mid);
                        s[v].retain(|&x| x != u);
                        s[v].push(mid);
                        s[leaf].push(mid);
                        next.push(s);
                    }
                }
            }
        }
        trees = next;
    }
    trees
}

/// Minimum over all cubic trees of the largest edge cut-rank.
pub fn naive_rank_width(g: &Graph) -> usize {
    let n = g.n();
    match n {
        0 | 1 => 0,
        2 => cut_of(g, &BTreeSet::from([0])),
        _ => cubic_trees(n)
            .iter()
            .map(|t| {
                let mut w = 0;
                for u in 0..t.len() {
                    for &v in &t[u] {
                        w = w.max(cut_of(g, &leaves_beyond(t, n, u, v)));
                    }
                }
                w
            })
            .min()
            .unwrap(),
    }
}

/// Shape of a tree as seen by a connectivity function: the partition of
/// the leaves at every internal node, plus the radius.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Profile {
    nodes: BTreeSet<BTreeSet<BTreeSet<usize>>>,
    radius: usize,
}

fn decode_pruefer(seq: &[usize], nodes: usize) -> Tree {
    let mut degree = vec![1; nodes];
    for &x in seq {
        degree[x] += 1;
    }
    let mut t: Tree = vec![Vec::new(); nodes];
    for &x in seq {
        let leaf = (0..nodes).find(|&v| degree[v] == 1).unwrap();
        t[leaf].push(x);
        t[x].push(leaf);
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..nodes).filter(|&v| degree[v] == 1).collect();
    t[rest[0]].push(rest[1]);
    t[rest[1]].push(rest[0]);
    t
}

fn radius(t: &Tree) -> usize {
    (0..t.len())
        .map(|s| {
            let mut dist = vec![usize::MAX; t.len()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &t[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            *dist.iter().max().unwrap()
        })
        .min()
        .unwrap()
}

/// Every tree with leaves `0..n` and all other nodes of degree at least
/// three, up to relabelling of the internal nodes.
fn decomposition_profiles(n: usize) -> Vec<Profile> {
    let mut seen = HashSet::new();
    for internal in 1..=n - 2 {
        let nodes = n + internal;
        let len = nodes - 2;
        let mut seq = vec![0usize; len];
        loop {
            let mut counts = vec![0; internal];
            for &x in &seq {
                counts[x] += 1;
            }
            if counts.iter().all(|&c| c >= 2) {
                let labelled: Vec<usize> = seq.iter().map(|&x| n + x).collect();
                let t = decode_pruefer(&labelled, nodes);
                let parts = (n..nodes)
                    .map(|u| t[u].iter().map(|&v| leaves_beyond(&t, n, u, v)).collect())
                    .collect();
                seen.insert(Profile {
                    nodes: parts,
                    radius: radius(&t),
                });
            }
            // odometer over internal labels
            let mut i = 0;
            while i < len && seq[i] + 1 == internal {
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            seq[i] += 1;
        }
    }
    let mut out: Vec<Profile> = seen.into_iter().collect();
    out.sort_by_key(|p| p.radius);
    out
}

/// Rank-depth evaluator with the tree shapes for one vertex count cached.
pub struct NaiveRankDepth {
    n: usize,
    profiles: Vec<Profile>,
}

impl NaiveRankDepth {
    pub fn new(n: usize) -> Self {
        let profiles = if n >= 3 { decomposition_profiles(n) } else { Vec::new() };
        NaiveRankDepth { n, profiles }
    }

    pub fn tree_count(&self) -> usize {
        self.profiles.len()
    }

    /// Least `k` such that some tree has radius and width at most `k`.
    pub fn eval(&self, g: &Graph) -> usize {
        assert_eq!(g.n(), self.n);
        match self.n {
            0 | 1 => return 0,
            2 => return 1,
            _ => {}
        }
        self.profiles
            .iter()
            .map(|p| {
                let mut width = 0;
                for parts in &p.nodes {
                    let parts: Vec<&BTreeSet<usize>> = parts.iter().collect();
                    for pick in 1..(1u32 << parts.len()) - 1 {
                        let mut union = BTreeSet::new();
                        for (i, part) in parts.iter().enumerate() {
                            if pick >> i & 1 == 1 {
                                union.extend(part.iter().copied());
                            }
                        }
                        width = width.max(cut_of(g, &union));
                    }
                }
                width.max(p.radius)
            })
            .min()
            .unwrap()
    }
}

pub fn naive_rank_depth(g: &Graph) -> usize {
    NaiveRankDepth::new(g.n()).eval(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn tree_counts() {
        // (2n-5)!! labelled cubic trees
        assert_eq!(cubic_trees(4).len(), 3);
        assert_eq!(cubic_trees(5).len(), 15);
        assert_eq!(cubic_trees(6).len(), 105);
        // stars plus the three two-hub trees
        assert_eq!(NaiveRankDepth::new(4).tree_count(), 4);
    }

    #[test]
    fn known_values() {
        let g = |name: &str, n: usize| generate(name, &[n]).unwrap();
        assert_eq!(naive_rank_depth(&g("path", 4)), 2);
        assert_eq!(naive_rank_depth(&g("complete", 5)), 1);
        assert_eq!(naive_rank_width(&g("cycle", 5)), 2);
        assert_eq!(naive_linear_rank_width(&g("cycle", 5)), 2);
        assert_eq!(naive_linear_rank_width(&g("path", 6)), 1);
        assert_eq!(naive_rank(&[vec![1, 1], vec![1, 1]]), 1);
    }
}
