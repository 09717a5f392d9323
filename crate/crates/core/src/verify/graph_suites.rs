use std::collections::BTreeMap;

use rand::Rng;

use crate::bitmatrix::masked_rank;
use crate::coloring::{chromatic_number, clique_number};
use crate::graph::{canonical_form, contains_induced, generate, Graph};
use crate::vertex_minor::{first_minor_among, lc_rows, minor_search, orbit_with, pivot_rows, verify_witness, MinorSearch, Op, Relation, Script};
use crate::width::linear_rank_width;

use super::{failure, g6, random_graph, tally, Context, Outcome, SuiteReport};

fn named(name: &str, params: &[usize]) -> Graph {
    generate(name, params).expect("fixed family parameters are valid")
}

fn half(a: usize, b: usize, n: usize) -> Graph {
    named("half_graph", &[a, b, n])
}

fn with_script(g: &Graph, script: &Script) -> String {
    format!("{}\n{}", g6(g), script)
}

fn set_labels(g: &Graph, set: u64) -> String {
    g.labels_of(set).join(",")
}

/// Exhaustive small graphs first, then random ones of up to nine vertices.
fn small_then_random(ctx: &Context, suite: &str, exhaustive_n: usize) -> Vec<Graph> {
    let mut graphs = ctx.graphs().up_to(exhaustive_n);
    let mut rng = ctx.rng(suite);
    for _ in 0..ctx.budget.random_instances {
        let n = rng.gen_range(2..=9);
        graphs.push(random_graph(&mut rng, n));
    }
    graphs
}

pub(super) fn cutrank_invariance(ctx: &Context) -> SuiteReport {
    let graphs = small_then_random(ctx, "cutrank_invariance", 5);
    let outcomes = ctx.exec.map(&graphs, |g| {
        let adj = g.adjacency();
        let ground = g.all_vertices();
        let same = |other: &[u64]| (0..=ground).find(|&s| masked_rank(adj, s, ground & !s) != masked_rank(other, s, ground & !s));
        for v in 0..g.n() {
            let mut h = adj.to_vec();
            lc_rows(&mut h, v);
            if let Some(s) = same(&h) {
                let script = Script(vec![Op::Lc(g.label(v).to_string())]);
                return Outcome::Fail(failure(g6(g), format!("cut-rank of {{{}}} changes", set_labels(g, s)), with_script(g, &script)));
            }
        }
        for (u, v) in g.edges() {
            let mut h = adj.to_vec();
            pivot_rows(&mut h, u, v);
            if let Some(s) = same(&h) {
                let script = Script(vec![Op::Pivot(g.label(u).to_string(), g.label(v).to_string())]);
                return Outcome::Fail(failure(g6(g), format!("cut-rank of {{{}}} changes", set_labels(g, s)), with_script(g, &script)));
            }
        }
        Outcome::Pass
    });
    tally(
        "cutrank_invariance",
        outcomes,
        vec!["every local complementation and every pivot preserves every cut-rank value".into()],
    )
}

/// `rho_H(X & K) <= rho_G(X)` for every `X`, where `H = (G * lcs)[K]`.
fn monotone_after(g: &Graph, ops: &[usize], keep: u64) -> Option<u64> {
    let adj = g.adjacency();
    let mut h = adj.to_vec();
    for &v in ops {
        lc_rows(&mut h, v);
    }
    let ground = g.all_vertices();
    (0..=ground).find(|&x| masked_rank(&h, x & keep, keep & !x) > masked_rank(adj, x, ground & !x))
}

fn derivation_script(g: &Graph, ops: &[usize], keep: u64) -> Script {
    let mut s: Vec<Op> = ops.iter().map(|&v| Op::Lc(g.label(v).to_string())).collect();
    s.push(Op::Keep(g.labels_of(keep)));
    Script(s)
}

pub(super) fn minor_monotone(ctx: &Context) -> SuiteReport {
    #[derive(Clone)]
    enum Case {
        Exhaustive(Graph),
        Random(Graph, Vec<usize>, u64),
        Depth(Graph, Vec<usize>, u64),
    }
    let mut cases: Vec<Case> = ctx.graphs().up_to(5).into_iter().map(Case::Exhaustive).collect();
    let mut rng = ctx.rng("minor_monotone");
    let derivation = |rng: &mut rand_chacha::ChaCha8Rng, max_n: usize| {
        let n = rng.gen_range(2..=max_n);
        let g = random_graph(rng, n);
        let ops: Vec<usize> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..n)).collect();
        let mut keep = 0;
        while keep == 0 {
            keep = rng.gen::<u64>() & g.all_vertices();
        }
        (g, ops, keep)
    };
    for _ in 0..ctx.budget.random_instances {
        let (g, ops, keep) = derivation(&mut rng, 9);
        cases.push(Case::Random(g, ops, keep));
    }
    for _ in 0..200 {
        let (g, ops, keep) = derivation(&mut rng, 7);
        cases.push(Case::Depth(g, ops, keep));
    }
    let depths = ctx.depths();
    let outcomes = ctx.exec.map(&cases, |case| match case {
        Case::Exhaustive(g) => {
            let singles = std::iter::once(None).chain((0..g.n()).map(Some));
            for v in singles {
                let ops: Vec<usize> = v.into_iter().collect();
                for keep in 1..=g.all_vertices() {
                    if let Some(x) = monotone_after(g, &ops, keep) {
                        let s = derivation_script(g, &ops, keep);
                        return Outcome::Fail(failure(g6(g), format!("cut-rank grows on X = {{{}}}", set_labels(g, x)), with_script(g, &s)));
                    }
                }
            }
            Outcome::Pass
        }
        Case::Random(g, ops, keep) => {
            let s = derivation_script(g, ops, *keep);
            Outcome::check(monotone_after(g, ops, *keep).is_none(), || {
                failure(g6(g), "cut-rank grows under a vertex-minor derivation", with_script(g, &s))
            })
        }
        Case::Depth(g, ops, keep) => {
            let s = derivation_script(g, ops, *keep);
            let h = s.replay(g).expect("derivation uses valid labels");
            let (dg, dh) = (depths.value(g), depths.value(&h));
            Outcome::check(dh <= dg, || failure(g6(g), format!("rank-depth {dh} of the vertex-minor exceeds {dg}"), with_script(g, &s)))
        }
    });
    tally(
        "minor_monotone",
        outcomes,
        vec![
            "cut-rank: one or zero local complementations and every induced subgraph, on every graph with at most 5 vertices, plus random derivations".into(),
            "rank-depth: 200 random derivations on graphs with at most 7 vertices".into(),
        ],
    )
}

fn search_outcome(g: &Graph, h: &Graph, relation: Relation, result: MinorSearch, instance: String, expect_found: bool) -> Outcome {
    match result {
        MinorSearch::Found(script) => {
            if !expect_found {
                return Outcome::Fail(failure(instance, format!("unexpected {relation} minor"), with_script(g, &script)));
            }
            let valid = verify_witness(g, h, &script).unwrap_or(false) && script.uses_only(relation);
            Outcome::check(valid, || failure(instance, "witness does not replay to the pattern", with_script(g, &script)))
        }
        MinorSearch::NotFound => Outcome::check(!expect_found, || {
            failure(instance, format!("no {relation} minor found in the exhausted orbit"), format!("{}\n{}", g6(g), g6(h)))
        }),
        MinorSearch::Inconclusive { explored } => Outcome::Inconclusive(failure(
            instance,
            format!("orbit search stopped after {explored} classes; raise --budget"),
            format!("{}\n{}", g6(g), g6(h)),
        )),
    }
}

pub(super) fn pivot_paths(ctx: &Context) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 1..=3 {
        cases.push((format!("K{n}▽S{n} ⊇pm P{}", n + 1), half(1, 0, n), named("path", &[n + 1])));
        cases.push((format!("S{n}▽S{n} ⊇pm P{}", 2 * n), half(0, 0, n), named("path", &[2 * n])));
    }
    let outcomes: Vec<Outcome> = cases
        .iter()
        .map(|(name, g, h)| match minor_search(g, h, Relation::Pivot, ctx.budget.member_limit, ctx.exec) {
            Ok(r) => search_outcome(g, h, Relation::Pivot, r, name.clone(), true),
            Err(e) => Outcome::Fail(failure(name.clone(), e.to_string(), g6(g))),
        })
        .collect();
    tally("pivot_paths", outcomes, vec![])
}

pub(super) fn halfgraph_p5_free(ctx: &Context) -> SuiteReport {
    let p5 = named("path", &[5]);
    let mut notes = Vec::new();
    let outcomes = (1..=4)
        .map(|n| {
            let g = half(1, 1, n);
            let name = format!("K{n}▽K{n} has no pivot-minor P5");
            let orbit = orbit_with(&g, Relation::Pivot, ctx.budget.member_limit, ctx.exec).expect("valid graph");
            notes.push(format!("K{n}▽K{n}: pivot orbit has {} isomorphism classes (exhausted: {})", orbit.len(), orbit.is_exhausted()));
            match minor_search(&g, &p5, Relation::Pivot, ctx.budget.member_limit, ctx.exec) {
                Ok(r) => search_outcome(&g, &p5, Relation::Pivot, r, name, false),
                Err(e) => Outcome::Fail(failure(name, e.to_string(), g6(&g))),
            }
        })
        .collect();
    tally("halfgraph_p5_free", outcomes, notes)
}

pub(super) fn halfgraph_vm_path(ctx: &Context) -> SuiteReport {
    let outcomes = (2..=4)
        .map(|n| {
            let g = half(1, 1, n);
            let h = named("path", &[2 * n - 2]);
            let name = format!("K{n}▽K{n} ⊇vm P{}", 2 * n - 2);
            match minor_search(&g, &h, Relation::Local, ctx.budget.member_limit, ctx.exec) {
                Ok(r) => search_outcome(&g, &h, Relation::Local, r, name, true),
                Err(e) => Outcome::Fail(failure(name, e.to_string(), g6(&g))),
            }
        })
        .collect();
    tally("halfgraph_vm_path", outcomes, vec![])
}

fn claw_obstructions() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1,3", named("star", &[3])),
        ("P5", named("path", &[5])),
        ("bull", named("bull", &[])),
        ("W4", named("w4", &[])),
        ("BW3-complement", named("bw3c", &[])),
    ]
}

fn first_induced(g: &Graph, patterns: &[(&'static str, Graph)]) -> Option<(&'static str, u64)> {
    patterns.iter().find_map(|(name, p)| contains_induced(g, p).map(|s| (*name, s)))
}

pub(super) fn knkn_forbidden(ctx: &Context) -> SuiteReport {
    let patterns = claw_obstructions();
    let ns: Vec<usize> = (1..=6).collect();
    let outcomes = ctx.exec.map(&ns, |&n| {
        let g = half(1, 1, n);
        match first_induced(&g, &patterns) {
            None => Outcome::Pass,
            Some((name, set)) => Outcome::Fail(failure(
                format!("K{n}▽K{n}"),
                format!("induced {name}"),
                with_script(&g, &Script(vec![Op::Keep(g.labels_of(set))])),
            )),
        }
    });
    tally("knkn_forbidden", outcomes, vec![])
}

pub(super) fn dabrowski_claw(ctx: &Context) -> SuiteReport {
    let patterns = claw_obstructions();
    let claw = patterns[0].1.clone();
    let graphs = ctx.graphs().up_to(6);
    let limit = ctx.budget.member_limit;
    let outcomes = ctx.exec.map(&graphs, |g| {
        let induced = first_induced(g, &patterns);
        let search = minor_search(g, &claw, Relation::Pivot, limit, crate::par::Execution::Sequential).expect("valid graphs");
        let instance = g6(g);
        match (&search, induced) {
            (MinorSearch::Inconclusive { .. }, _) => search_outcome(g, &claw, Relation::Pivot, search, instance, true),
            (MinorSearch::Found(_), Some(_)) => search_outcome(g, &claw, Relation::Pivot, search, instance, true),
            (MinorSearch::NotFound, None) => Outcome::Pass,
            (MinorSearch::Found(script), None) => Outcome::Fail(failure(instance, "pivot-minor K1,3 without an induced obstruction", with_script(g, script))),
            (MinorSearch::NotFound, Some((name, set))) => Outcome::Fail(failure(
                instance,
                format!("induced {name} but no pivot-minor K1,3"),
                with_script(g, &Script(vec![Op::Keep(g.labels_of(set))])),
            )),
        }
    });
    tally("dabrowski_claw", outcomes, vec![])
}

fn lrw1_obstructions() -> Vec<Graph> {
    vec![named("c5", &[]), named("n_graph", &[]), named("q_graph", &[])]
}

pub(super) fn lrw1_equivalence(ctx: &Context) -> SuiteReport {
    let patterns = lrw1_obstructions();
    let graphs = ctx.graphs().up_to(6);
    let limit = ctx.budget.member_limit;
    let outcomes = ctx.exec.map(&graphs, |g| {
        let lrw = linear_rank_width(g).expect("small graph").value;
        let (hit, search) = first_minor_among(g, &patterns, Relation::Local, limit, crate::par::Execution::Sequential).expect("valid graphs");
        let instance = g6(g);
        match (search, hit) {
            (MinorSearch::Inconclusive { explored }, _) => Outcome::Inconclusive(failure(instance, format!("orbit search stopped after {explored} classes"), g6(g))),
            (MinorSearch::Found(script), Some(_)) => {
                Outcome::check(lrw >= 2, || failure(instance, format!("linear rank-width {lrw} yet has an obstruction vertex-minor"), with_script(g, &script)))
            }
            _ => Outcome::check(lrw <= 1, || failure(instance, format!("linear rank-width {lrw} yet no obstruction vertex-minor"), g6(g))),
        }
    });
    tally("lrw1_equivalence", outcomes, vec![])
}

pub(super) fn path_vm_lrw1(ctx: &Context) -> SuiteReport {
    let p8 = named("path", &[8]);
    let orbit = orbit_with(&p8, Relation::Local, ctx.budget.member_limit, ctx.exec).expect("valid graph");
    // distinct vertex-minor classes, each with a derivation
    let mut classes: BTreeMap<_, (Graph, Script)> = BTreeMap::new();
    for i in 0..orbit.len() {
        let member = orbit.member(i);
        for keep in 1..=member.all_vertices() {
            let h = member.induce(keep).expect("subset of vertices");
            let key = canonical_form(&h).expect("at most 8 vertices").key();
            classes.entry(key).or_insert_with(|| {
                let mut s = orbit.script_to(i);
                s.0.push(Op::Keep(member.labels_of(keep)));
                (h, s)
            });
        }
    }
    let entries: Vec<(Graph, Script)> = classes.into_values().collect();
    let mut outcomes = ctx.exec.map(&entries, |(h, s)| {
        let w = linear_rank_width(h).expect("at most 8 vertices").value;
        Outcome::check(w <= 1, || failure(g6(h), format!("vertex-minor of P8 with linear rank-width {w}"), with_script(&p8, s)))
    });
    let mut notes = vec![format!(
        "P8: {} locally equivalent classes, {} vertex-minor classes checked",
        orbit.len(),
        entries.len()
    )];
    if !orbit.is_exhausted() {
        notes.push("local orbit of P8 was cut by the member limit".into());
        outcomes.push(Outcome::Inconclusive(failure("P8 orbit", "member limit reached before the orbit closed", g6(&p8))));
    }
    tally("path_vm_lrw1", outcomes, notes)
}

pub(super) fn chi_omega_spot(ctx: &Context) -> SuiteReport {
    let graphs: Vec<Graph> = ctx.graphs().up_to(6);
    let rows = ctx.exec.map(&graphs, |g| {
        let lrw = linear_rank_width(g).expect("small graph").value;
        (lrw, chromatic_number(g).expect("small graph"), clique_number(g).expect("small graph"))
    });
    let mut best: Option<(usize, usize, usize)> = None;
    let mut counted = 0;
    for (i, &(lrw, chi, omega)) in rows.iter().enumerate() {
        if lrw > 2 {
            continue;
        }
        counted += 1;
        if best.is_none_or(|(_, c, o)| chi * o > c * omega) {
            best = Some((i, chi, omega));
        }
    }
    let mut notes = vec![format!("{counted} graphs on at most 6 vertices have linear rank-width at most 2")];
    if let Some((i, chi, omega)) = best {
        notes.push(format!(
            "largest chi/omega = {chi}/{omega} = {:.3}, attained first by {}",
            chi as f64 / omega as f64,
            g6(&graphs[i])
        ));
    }
    notes.push("report only: no bound is asserted".into());
    let outcomes = vec![Outcome::Pass; counted];
    tally("chi_omega_spot", outcomes, notes)
}
