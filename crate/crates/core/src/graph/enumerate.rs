//! Exhaustive catalogs of small graphs.

use std::collections::BTreeMap;

use super::canon::{canonical_key, canonize, CanonKey};
use super::Graph;

/// Every labeled graph on `n` vertices, in order of the edge bitstring.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "2^(n choose 2) labeled graphs; refusing n = {n}");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len())
        .map(|bits| {
            let mut g = Graph::empty(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if (bits >> i) & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            g
        })
        .collect()
}

/// One representative per isomorphism class on exactly `n` vertices, each in
/// canonical labeling, sorted by canonical code.
///
/// Built by adding a vertex with every possible neighborhood to the classes
/// on `n - 1` vertices and filtering by canonical form.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "catalog size explodes past 10 vertices");
    let mut level: BTreeMap<CanonKey, Graph> = BTreeMap::new();
    level.insert(canonical_key(&[]), Graph::empty(0));
    for size in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in 0..1u64 << (size - 1) {
                let mut adj = g.adjacency().to_vec();
                for (v, row) in adj.iter_mut().enumerate() {
                    if (nbrs >> v) & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                adj.push(nbrs);
                let c = canonize(&adj, 0);
                next.entry(c.key()).or_insert_with(|| c.graph());
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// All isomorphism classes on `1..=n` vertices, smallest first.
pub fn nonisomorphic_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(nonisomorphic_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_values() {
        let counts: Vec<usize> = (0..=7).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(all_labeled_graphs(4).len(), 64);
        assert_eq!(all_labeled_graphs(0).len(), 1);
    }
}
