//! Induced subgraph search by backtracking.

use super::{members, Graph, VertexSet};

/// Finds a vertex set `S` with `G[S]` isomorphic to `H`.
///
/// Returns the witness mask when one exists. Pattern vertices are matched in
/// breadth-first order so that adjacency constraints bite early.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    find_induced(g.adjacency(), h.adjacency())
}

pub(crate) fn find_induced(g: &[u64], h: &[u64]) -> Option<VertexSet> {
    let (n, k) = (g.len(), h.len());
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(0);
    }
    let g_deg: Vec<u32> = g.iter().map(|r| r.count_ones()).collect();
    let order = matching_order(h);
    let mut image = vec![usize::MAX; k];
    let mut search = Matcher { g, h, g_deg: &g_deg, order: &order, image: &mut image };
    if search.extend(0, 0) {
        Some(image.iter().fold(0, |m, &v| m | (1 << v)))
    } else {
        None
    }
}

fn matching_order(h: &[u64]) -> Vec<usize> {
    let k = h.len();
    let mut order = Vec::with_capacity(k);
    let mut placed: u64 = 0;
    while order.len() < k {
        // next: most connections to placed vertices, then highest degree
        let next = (0..k)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((h[v] & placed).count_ones(), h[v].count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    order
}

struct Matcher<'a> {
    g: &'a [u64],
    h: &'a [u64],
    g_deg: &'a [u32],
    order: &'a [usize],
    image: &'a mut [usize],
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let need_deg = self.h[p].count_ones();
        let n = self.g.len();
        let candidates = crate::bitmatrix::low_mask(n) & !used;
        for x in members(candidates) {
            if self.g_deg[x] < need_deg {
                continue;
            }
            let ok = self.order[..depth].iter().all(|&q| {
                let y = self.image[q];
                ((self.h[p] >> q) & 1) == ((self.g[x] >> y) & 1)
            });
            if !ok {
                continue;
            }
            self.image[p] = x;
            if self.extend(depth + 1, used | (1 << x)) {
                return true;
            }
        }
        self.image[p] = usize::MAX;
        false
    }
}
