//! Chromatic and clique numbers of small graphs.

use crate::graph::{Graph, GraphError};

pub const COLORING_MAX_VERTICES: usize = 16;

fn check(g: &Graph) -> Result<(), GraphError> {
    if g.n() > COLORING_MAX_VERTICES {
        Err(GraphError::TooLarge { n: g.n(), cap: COLORING_MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// Largest clique, by Bron-Kerbosch with pivoting.
pub fn clique_number(g: &Graph) -> Result<usize, GraphError> {
    check(g)?;
    let mut best = 0;
    expand(g.adjacency(), 0, g.all_vertices(), 0, &mut best);
    Ok(best)
}

fn expand(adj: &[u64], size: usize, mut candidates: u64, mut excluded: u64, best: &mut usize) {
    if candidates == 0 {
        if excluded == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let pool = candidates | excluded;
    let pivot = crate::graph::members(pool).max_by_key(|&u| (adj[u] & candidates).count_ones()).unwrap();
    let mut branch = candidates & !adj[pivot];
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        expand(adj, size + 1, candidates & adj[v], excluded & adj[v], best);
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
}

/// Least number of colors in a proper coloring.
pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    let lower = clique_number(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    // highest degree first keeps the search tree narrow
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let adj = g.adjacency();
    let mut color = vec![usize::MAX; n];
    (lower.max(1)..=n)
        .find(|&k| colorable(adj, &order, 0, k, &mut color, 0))
        .ok_or(GraphError::TooLarge { n, cap: COLORING_MAX_VERTICES })
}

fn colorable(adj: &[u64], order: &[usize], i: usize, k: usize, color: &mut [usize], used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // a fresh color is interchangeable with any other fresh one
    for c in 0..k.min(used + 1) {
        if crate::graph::members(adj[v]).all(|u| color[u] != c) {
            color[v] = c;
            if colorable(adj, order, i + 1, k, color, used.max(c + 1)) {
                return true;
            }
        }
    }
    color[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, nonisomorphic_graphs};

    fn both(name: &str, n: usize) -> (usize, usize) {
        let g = generate(name, &[n]).unwrap();
        (chromatic_number(&g).unwrap(), clique_number(&g).unwrap())
    }

    #[test]
    fn examples() {
        for n in 1..=7 {
            assert_eq!(both("complete", n), (n, n));
        }
        assert_eq!(both("cycle", 5), (3, 2));
        assert_eq!(both("path", 4), (2, 2));
        assert_eq!(both("edgeless", 3), (1, 1));
        assert_eq!(both("cycle", 7), (3, 2));
        assert!(clique_number(&Graph::empty(17)).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 1..=6 {
            for g in nonisomorphic_graphs(n) {
                let adj = g.adjacency();
                let omega = (0u64..1 << n)
                    .filter(|&s| crate::graph::members(s).all(|v| (adj[v] | 1 << v) & s == s))
                    .map(|s| s.count_ones() as usize)
                    .max()
                    .unwrap();
                assert_eq!(clique_number(&g).unwrap(), omega);
                let chi = (1..=n)
                    .find(|&k| {
                        let total = k.pow(n as u32);
                        (0..total).any(|mut code| {
                            let mut col = vec![0; n];
                            for c in col.iter_mut() {
                                *c = code % k;
                                code /= k;
                            }
                            g.edges().iter().all(|&(u, v)| col[u] != col[v])
                        })
                    })
                    .unwrap();
                assert_eq!(chromatic_number(&g).unwrap(), chi);
            }
        }
    }
}
