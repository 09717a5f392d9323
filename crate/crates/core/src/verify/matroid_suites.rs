use rand::Rng;

use crate::graph::{generate, is_isomorphic};
use crate::matroid::{branch_depth, fan_matroid, fan_spokes, has_matroid_minor_with, BinaryMatroid, MatroidMinorSearch};
use crate::vertex_minor::pivot_at;

use super::{failure, g6, tally, Context, Outcome, SuiteReport};

fn matroid_witness(m: &BinaryMatroid, basis: u64) -> String {
    let names: Vec<&str> = crate::graph::members(basis).map(|e| m.labels()[e].as_str()).collect();
    format!("{}basis {}", m, names.join(","))
}

pub(super) fn matroid_fg_identity(ctx: &Context) -> SuiteReport {
    let mut rng = ctx.rng("matroid_fg_identity");
    let mut cases = Vec::new();
    for _ in 0..100 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=8);
        let m = BinaryMatroid::random(&mut rng, rows, cols);
        let bases = m.bases();
        let basis = bases[rng.gen_range(0..bases.len())];
        let delete = rng.gen::<u64>() & m.ground();
        let contract = rng.gen::<u64>() & m.ground() & !delete;
        cases.push((m, basis, delete, contract, rng.gen::<u64>()));
    }
    let outcomes = ctx.exec.map(&cases, |(m, basis, delete, contract, pick)| {
        let basis = *basis;
        let w = || matroid_witness(m, basis);
        let fg = match m.fundamental_graph(basis) {
            Ok(fg) => fg,
            Err(e) => return Outcome::Fail(failure("fundamental graph", e.to_string(), w())),
        };
        let ground = m.ground();
        for s in 0..=ground {
            let lambda = m.connectivity_of(s);
            if lambda != fg.cut_rank_mask(s) {
                return Outcome::Fail(failure("λ = ρ", format!("λ = {lambda} but cut-rank {} at {s:#b}", fg.cut_rank_mask(s)), w()));
            }
            if lambda != m.connectivity_of(ground & !s) {
                return Outcome::Fail(failure("λ symmetric", format!("asymmetric at {s:#b}"), w()));
            }
        }
        // submodularity on a sample of pairs
        let mut x = *pick;
        for _ in 0..64 {
            x = x.rotate_left(17) ^ 0x9E37_79B9_7F4A_7C15;
            let (a, b) = (x & ground, x.rotate_left(29) & ground);
            if m.connectivity_of(a & b) + m.connectivity_of(a | b) > m.connectivity_of(a) + m.connectivity_of(b) {
                return Outcome::Fail(failure("λ submodular", format!("fails at {a:#b}, {b:#b}"), w()));
            }
        }
        let edges = fg.edges();
        if !edges.is_empty() {
            let (b, e) = edges[(*pick as usize) % edges.len()];
            let pivoted = pivot_at(&fg, b, e).expect("edge of fg");
            let exchanged = basis ^ (1 << b) ^ (1 << e);
            match m.fundamental_graph(exchanged) {
                Ok(h) if h == pivoted => {}
                _ => return Outcome::Fail(failure("pivot exchange", format!("pivoting {b}-{e} is not the exchanged fundamental graph"), w())),
            }
        }
        let minor = m.minor(*delete, *contract).expect("disjoint sets");
        let (dm, dn) = (branch_depth(m).expect("<= 8 elements").value, branch_depth(&minor).expect("<= 8 elements").value);
        Outcome::check(dn <= dm, || failure("branch-depth monotone", format!("minor has branch-depth {dn} > {dm}"), w()))
    })
    .into_iter()
    .collect();
    tally(
        "matroid_fg_identity",
        outcomes,
        vec!["100 random binary matroids on at most 8 elements: λ equals the cut-rank of a random fundamental graph, λ is symmetric and submodular, pivoting exchanges the basis, and branch-depth does not grow under a random minor".into()],
    )
}

pub(super) fn fan_fundamental(_ctx: &Context) -> SuiteReport {
    let outcomes = (2..=5)
        .map(|t| {
            let m = fan_matroid(t);
            let spokes = fan_spokes(&m, t);
            let path = generate("path", &[2 * t - 1]).expect("path");
            match m.fundamental_graph(spokes) {
                Ok(fg) => Outcome::check(is_isomorphic(&fg, &path).unwrap_or(false), || {
                    failure(format!("fan {t}"), format!("fundamental graph {} is not P{}", g6(&fg), 2 * t - 1), matroid_witness(&m, spokes))
                }),
                Err(e) => Outcome::Fail(failure(format!("fan {t}"), e.to_string(), matroid_witness(&m, spokes))),
            }
        })
        .collect();
    tally("fan_fundamental", outcomes, vec![])
}

pub(super) fn fan_minor_chain(ctx: &Context) -> SuiteReport {
    let mut notes = Vec::new();
    let mut cases = Vec::new();
    for t in 2..=3 {
        cases.push((format!("M(F{}) ⊇ M(F{t})", t + 1), fan_matroid(t + 1), fan_matroid(t)));
    }
    for t in 3..=4 {
        cases.push((format!("M(F{t})* ⊇ M(F{})", t - 1), fan_matroid(t).dual(), fan_matroid(t - 1)));
    }
    let outcomes = cases
        .iter()
        .map(|(name, m, n)| match has_matroid_minor_with(m, n, ctx.exec) {
            Ok(MatroidMinorSearch::Found { delete, contract }) => {
                notes.push(format!("{name}: delete {{{}}}, contract {{{}}}", delete.join(","), contract.join(",")));
                let ok = m.minor_by_labels(&delete, &contract).and_then(|x| x.is_isomorphic(n)).unwrap_or(false);
                Outcome::check(ok, || failure(name.clone(), "reported minor is not isomorphic", m.to_string()))
            }
            Ok(MatroidMinorSearch::NotFound) => Outcome::Fail(failure(name.clone(), "no minor", m.to_string())),
            Ok(MatroidMinorSearch::Inconclusive { reason }) => Outcome::Inconclusive(failure(name.clone(), reason, m.to_string())),
            Err(e) => Outcome::Fail(failure(name.clone(), e.to_string(), m.to_string())),
        })
        .collect();
    tally("fan_minor_chain", outcomes, notes)
}
