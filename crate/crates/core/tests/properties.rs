use proptest::prelude::*;

use vmkit_core::graph::{canonical_form, is_isomorphic, nonisomorphic_graphs_up_to, parse_graph6, write_graph6, Graph};
use vmkit_core::matroid::{branch_depth, cycle_matroid, BinaryMatroid};
use vmkit_core::par::Execution;
use vmkit_core::vertex_minor::{local_complement_at, pivot_at, Op, Script};
use vmkit_core::width::{linear_rank_width, rank_depth, rank_width, ConnectivitySystem, Decomposition};
use vmkit_core::{verify, BitMatrix};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trips(g in graph(40)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn local_complementation_is_an_involution(g in graph(12), v in 0usize..12) {
        let v = v % g.n();
        prop_assert_eq!(local_complement_at(&local_complement_at(&g, v), v), g);
    }

    #[test]
    fn pivot_is_three_local_complementations(g in graph(10)) {
        for (u, v) in g.edges() {
            let three = local_complement_at(&local_complement_at(&local_complement_at(&g, u), v), u);
            prop_assert_eq!(pivot_at(&g, u, v).unwrap(), three);
        }
    }

    #[test]
    fn cut_rank_is_symmetric_and_invariant(g in graph(9), v in 0usize..9) {
        let h = local_complement_at(&g, v % g.n());
        let ground = g.all_vertices();
        for s in 0..=ground {
            prop_assert_eq!(g.cut_rank_mask(s), g.cut_rank_mask(ground & !s));
            prop_assert_eq!(g.cut_rank_mask(s), h.cut_rank_mask(s));
        }
    }

    #[test]
    fn canonical_form_ignores_relabeling(g in graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let mut h = Graph::empty(n);
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        prop_assert_eq!(canonical_form(&g).unwrap().key(), canonical_form(&h).unwrap().key());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn witness_text_round_trips(g in graph(8)) {
        prop_assume!(g.n() >= 2);
        let r = rank_depth(&g).unwrap();
        let d = r.witness.unwrap();
        let back = Decomposition::parse(&d.to_text(g.labels()), g.labels()).unwrap();
        let sys = ConnectivitySystem::cut_rank(&g);
        prop_assert_eq!(back.width(&sys).unwrap(), d.width(&sys).unwrap());
        prop_assert_eq!(back.radius(), d.radius());
        prop_assert!(d.width(&sys).unwrap().max(d.radius()) == r.value);
    }

    #[test]
    fn width_parameters_are_ordered(g in graph(8)) {
        prop_assume!(g.n() >= 2);
        let rw = rank_width(&g).unwrap().value;
        let lrw = linear_rank_width(&g).unwrap().value;
        let rd = rank_depth(&g).unwrap().value;
        prop_assert!(rw <= lrw);
        prop_assert!(rw <= rd.max(1));
        prop_assert!(lrw <= rd * rd);
    }

    #[test]
    fn matroid_text_and_double_dual(rows in proptest::collection::vec(proptest::collection::vec(0u8..2, 7), 1..5)) {
        let m = BinaryMatroid::from_matrix(BitMatrix::from_rows(&rows, 7)).unwrap();
        let back: BinaryMatroid = m.to_string().parse().unwrap();
        prop_assert!(back.is_isomorphic(&m).unwrap());
        prop_assert!(m.dual().dual().is_isomorphic(&m).unwrap());
        prop_assert_eq!(m.dual().rank(), m.len() - m.rank());
    }
}

#[test]
fn script_text_round_trips() {
    let s = Script(vec![Op::Lc("3".into()), Op::Pivot("0".into(), "2".into()), Op::Keep(vec!["0".into(), "1".into()])]);
    assert_eq!(s.to_string().parse::<Script>().unwrap(), s);
}

#[test]
fn rank_width_never_exceeds_linear_rank_width_up_to_seven() {
    for g in nonisomorphic_graphs_up_to(7).into_iter().filter(|g| g.n() >= 2) {
        assert!(rank_width(&g).unwrap().value <= linear_rank_width(&g).unwrap().value);
    }
}

#[test]
fn cycle_matroid_of_a_tree_is_free() {
    let star = vmkit_core::graph::generate("star", &[4]).unwrap();
    let m = cycle_matroid(&star);
    assert_eq!(m.rank(), 4);
    // a free matroid splits at every edge
    assert_eq!(branch_depth(&m).unwrap().value, 1);
}

#[test]
fn backends_produce_identical_reports() {
    let budget = verify::Budget { random_instances: 50, ..Default::default() };
    for suite in ["cutrank_invariance", "balance", "dabrowski_claw", "matroid_fg_identity"] {
        let mut a = verify::run(suite, &verify::Context::new(budget, Execution::Sequential)).unwrap();
        let mut b = verify::run(suite, &verify::Context::new(budget, Execution::Parallel)).unwrap();
        a.strip_timings();
        b.strip_timings();
        assert_eq!(a.to_json(), b.to_json(), "{suite}");
    }
}
