//! Exact rank-depth by dynamic programming over vertex subsets.
//!
//! A tree of radius at most `k` rooted at a center is a hierarchy of blocks:
//! each internal node splits its leaf set into at least two children. Its
//! width is the maximum connectivity over unions of child blocks (the part
//! containing the parent is covered by symmetry). For fixed `k` we compute,
//! for every subset, the least height of such a hierarchy all of whose
//! nodes have width at most `k`.

use crate::graph::Graph;

use super::{check_cap, ConnectivitySystem, Decomposition, WidthError};

pub const RANK_DEPTH_MAX_VERTICES: usize = 8;

const INFEASIBLE: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthResult {
    pub value: usize,
    /// Optimal decomposition; `None` below two elements.
    pub witness: Option<Decomposition>,
}

pub fn rank_depth(g: &Graph) -> Result<DepthResult, WidthError> {
    check_cap("vertex count", g.n(), RANK_DEPTH_MAX_VERTICES)?;
    rank_depth_of(&ConnectivitySystem::cut_rank(g).tabulated(), RANK_DEPTH_MAX_VERTICES)
}

/// Least `k` admitting a decomposition of width and radius at most `k`.
pub fn rank_depth_of(sys: &ConnectivitySystem, cap: usize) -> Result<DepthResult, WidthError> {
    let n = sys.n();
    check_cap("ground set size", n, cap)?;
    if n < 2 {
        return Ok(DepthResult { value: 0, witness: None });
    }
    let sys = sys.clone().tabulated();
    for k in 1..=n {
        let table = HeightTable::build(&sys, k);
        if table.height[sys.ground() as usize] as usize <= k {
            return Ok(DepthResult {
                value: k,
                witness: Some(table.witness(n)),
            });
        }
    }
    unreachable!("the star decomposition has radius 1 and width at most n")
}

struct HeightTable {
    height: Vec<u8>,
    split: Vec<Vec<u64>>,
}

struct Search<'a> {
    sys: &'a ConnectivitySystem,
    k: usize,
    height: &'a [u8],
    best: u8,
    best_blocks: Vec<u64>,
    blocks: Vec<u64>,
}

impl Search<'_> {
    fn block_height(&self, b: u64) -> u8 {
        if b.count_ones() == 1 {
            0
        } else {
            self.height[b as usize]
        }
    }

    fn extend(&mut self, rest: u64, unions: &[u64], tallest: u8, whole: bool) {
        if rest == 0 {
            if self.blocks.len() >= 2 && tallest + 1 < self.best {
                self.best = tallest + 1;
                self.best_blocks = self.blocks.clone();
            }
            return;
        }
        let low = rest & rest.wrapping_neg();
        let others = rest ^ low;
        let mut sub = others;
        loop {
            let b = sub | low;
            // The first block may not swallow the whole set.
            if !(whole && b == rest) {
                self.try_block(b, rest, unions, tallest);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
    }

    fn try_block(&mut self, b: u64, rest: u64, unions: &[u64], tallest: u8) {
        let h = self.block_height(b);
        if h == INFEASIBLE || h + 1 >= self.best {
            return;
        }
        let mut grown = Vec::with_capacity(unions.len() * 2);
        for &u in unions {
            let w = u | b;
            if self.sys.value(w) > self.k {
                return;
            }
            grown.push(u);
            grown.push(w);
        }
        self.blocks.push(b);
        self.extend(rest ^ b, &grown, tallest.max(h), false);
        self.blocks.pop();
    }
}

impl HeightTable {
    fn build(sys: &ConnectivitySystem, k: usize) -> Self {
        let ground = sys.ground();
        let size = ground as usize + 1;
        let mut height = vec![INFEASIBLE; size];
        let mut split = vec![Vec::new(); size];
        for set in 1..=ground {
            if set.count_ones() < 2 || (set != ground && sys.value(set) > k) {
                continue;
            }
            let mut s = Search {
                sys,
                k,
                height: &height,
                best: (k as u8).saturating_add(1),
                best_blocks: Vec::new(),
                blocks: Vec::new(),
            };
            s.extend(set, &[0], 0, true);
            if !s.best_blocks.is_empty() {
                let (best, blocks) = (s.best, s.best_blocks);
                height[set as usize] = best;
                split[set as usize] = blocks;
            }
        }
        HeightTable { height, split }
    }

    fn witness(&self, n: usize) -> Decomposition {
        let mut adj = vec![Vec::new(); n];
        let root = adj.len();
        adj.push(Vec::new());
        let mut stack = vec![(root, crate::bitmatrix::low_mask(n))];
        while let Some((node, set)) = stack.pop() {
            for &b in &self.split[set as usize] {
                let child = if b.count_ones() == 1 {
                    b.trailing_zeros() as usize
                } else {
                    adj.push(Vec::new());
                    stack.push((adj.len() - 1, b));
                    adj.len() - 1
                };
                adj[node].push(child);
                adj[child].push(node);
            }
        }
        Decomposition::new(adj, (0..n).collect()).expect("hierarchy yields a valid tree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, nonisomorphic_graphs};

    fn rd(name: &str, p: &[usize]) -> usize {
        rank_depth(&generate(name, p).unwrap()).unwrap().value
    }

    #[test]
    fn spec_examples() {
        assert_eq!(rd("path", &[1]), 0);
        assert_eq!(rank_depth(&Graph::empty(0)).unwrap().value, 0);
        assert_eq!(rd("complete", &[2]), 1);
        assert_eq!(rd("path", &[4]), 2);
        assert_eq!(rd("complete", &[5]), 1);
        assert_eq!(rd("edgeless", &[6]), 1);
        assert_eq!(rd("star", &[7]), 1);
    }

    #[test]
    fn over_cap_is_a_budget_error() {
        let g = generate("path", &[9]).unwrap();
        assert!(matches!(rank_depth(&g), Err(WidthError::Budget { .. })));
    }

    #[test]
    fn witnesses_certify_their_value() {
        for n in 2..=6 {
            for g in nonisomorphic_graphs(n) {
                let r = rank_depth(&g).unwrap();
                let d = r.witness.unwrap();
                let sys = ConnectivitySystem::cut_rank(&g);
                assert!(d.width(&sys).unwrap() <= r.value);
                assert!(d.radius() <= r.value);
                assert!(r.value >= 1);
            }
        }
    }

    #[test]
    fn paths_grow_slowly() {
        let values: Vec<usize> = (2..=8).map(|n| rd("path", &[n])).collect();
        assert_eq!(values[0], 1);
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }
}
