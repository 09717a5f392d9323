//! Exact engines against brute-force enumeration on every small graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vmkit_core::graph::nonisomorphic_graphs;
use vmkit_core::width::oracle::{naive_cut_rank, naive_linear_rank_width, naive_rank, naive_rank_width, NaiveRankDepth};
use vmkit_core::width::{linear_rank_width, rank_depth, rank_width};
use vmkit_core::BitMatrix;

#[test]
fn class_counts_up_to_six() {
    let counts: Vec<usize> = (1..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
}

#[test]
fn matrix_rank_matches_textbook_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let rows = rng.gen_range(0..12);
        let cols = rng.gen_range(0..70);
        let dense: Vec<Vec<u8>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..2)).collect()).collect();
        assert_eq!(BitMatrix::from_rows(&dense, cols).rank(), naive_rank(&dense));
    }
}

#[test]
fn cut_rank_matches_on_every_subset() {
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n) {
            for s in 0..=g.all_vertices() {
                let set: Vec<bool> = (0..n).map(|v| s >> v & 1 == 1).collect();
                assert_eq!(g.cut_rank_mask(s), naive_cut_rank(&g, &set));
            }
        }
    }
}

#[test]
fn widths_match_on_all_graphs_up_to_six() {
    for n in 1..=6 {
        let depth = NaiveRankDepth::new(n);
        for g in nonisomorphic_graphs(n) {
            assert_eq!(rank_depth(&g).unwrap().value, depth.eval(&g), "rank-depth of {g:?}");
            assert_eq!(rank_width(&g).unwrap().value, naive_rank_width(&g), "rank-width of {g:?}");
            assert_eq!(linear_rank_width(&g).unwrap().value, naive_linear_rank_width(&g), "linear rank-width of {g:?}");
        }
    }
}
