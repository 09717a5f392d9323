use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{generate, members, Graph};
use crate::width::{balance_partition, linear_rank_width, merge_decomposition, rank_width, ConnectivitySystem, PartDecomposition};

use super::{failure, g6, random_graph, tally, Context, Outcome, SuiteReport};

fn catalog(ctx: &Context) -> Vec<Graph> {
    ctx.graphs().up_to(7)
}

/// Largest rank-depth among the components of `g[within]`.
fn max_component_depth(ctx: &Context, g: &Graph, within: u64) -> usize {
    g.components_within(within)
        .into_iter()
        .map(|c| ctx.depths().value(&g.induce(c).expect("component of g")))
        .max()
        .unwrap_or(0)
}

pub(super) fn rd_component(ctx: &Context) -> SuiteReport {
    let graphs = catalog(ctx);
    let depths = ctx.depths();
    let outcomes = ctx.exec.map(&graphs, |g| {
        let m = depths.value(g);
        let best = max_component_depth(ctx, g, g.all_vertices());
        Outcome::check(best + 1 >= m, || failure(g6(g), format!("rank-depth {m} but every component has rank-depth at most {best}"), g6(g)))
    });
    tally("rd_component", outcomes, vec!["all graphs on at most 7 vertices".into()])
}

pub(super) fn rd_separation(ctx: &Context) -> SuiteReport {
    let graphs = catalog(ctx);
    let depths = ctx.depths();
    let outcomes = ctx.exec.map(&graphs, |g| {
        let m = depths.value(g);
        let ground = g.all_vertices();
        // |A| >= m makes the bound vacuous
        for a in 1..ground {
            let size = a.count_ones() as usize;
            if size >= m {
                continue;
            }
            let best = max_component_depth(ctx, g, ground & !a);
            if best + size < m {
                return Outcome::Fail(failure(
                    g6(g),
                    format!("removing {{{}}} leaves components of rank-depth at most {best}, below {m} - {size}", g.labels_of(a).join(",")),
                    g6(g),
                ));
            }
        }
        Outcome::Pass
    });
    tally(
        "rd_separation",
        outcomes,
        vec!["all graphs on at most 7 vertices, every nonempty proper removed set".into()],
    )
}

/// Optimal decompositions for the components of `g[within]`, in the
/// vertex numbering of `g`.
fn component_parts(ctx: &Context, g: &Graph, within: u64) -> (Vec<PartDecomposition>, usize) {
    let mut deepest = 0;
    let parts = g
        .components_within(within)
        .into_iter()
        .map(|c| {
            let verts: Vec<usize> = members(c).collect();
            if verts.len() == 1 {
                return PartDecomposition::singleton(verts[0]);
            }
            let (value, witness) = ctx.depths().witness(&g.induce(c).expect("component of g"));
            deepest = deepest.max(value);
            let (order, decomposition) = witness.expect("components with two or more vertices have witnesses");
            PartDecomposition {
                elements: order.into_iter().map(|i| verts[i]).collect(),
                decomposition: Some(decomposition),
            }
        })
        .collect();
    (parts, deepest)
}

pub(super) fn rd_merge(ctx: &Context) -> SuiteReport {
    let graphs: Vec<Graph> = catalog(ctx).into_iter().filter(|g| g.n() >= 2).collect();
    let depths = ctx.depths();
    let outcomes = ctx.exec.map(&graphs, |g| {
        let ground = g.all_vertices();
        let rd = depths.value(g);
        let sys = ConnectivitySystem::cut_rank(g).tabulated();
        // the two sides play symmetric roles, so vertex 0 stays on the first
        for a in (1..ground).filter(|a| a & 1 == 1) {
            let (parts_a, ma) = component_parts(ctx, g, a);
            let (parts_b, mb) = component_parts(ctx, g, ground & !a);
            let m = ma.max(mb).max(1);
            let d = g.cut_rank_mask(a).max(1);
            let sides = g.labels_of(a).join(",");
            let merged = match merge_decomposition(g, a, &parts_a, &parts_b, m, d) {
                Ok(t) => t,
                Err(e) => return Outcome::Fail(failure(g6(g), format!("A = {{{sides}}}: {e}"), g6(g))),
            };
            let certified = merged.width(&sys).expect("small degrees").max(merged.radius());
            if rd > m + d + 1 || rd > certified {
                return Outcome::Fail(failure(
                    g6(g),
                    format!("A = {{{sides}}}: rank-depth {rd} against m = {m}, d = {d}, merged decomposition certifies {certified}"),
                    format!("{}\n{}", g6(g), merged.to_text(g.labels())),
                ));
            }
        }
        Outcome::Pass
    });
    tally(
        "rd_merge",
        outcomes,
        vec!["all graphs on 2 to 7 vertices, every split with vertex 0 on the first side; component decompositions are optimal".into()],
    )
}

fn balance_check(g: &Graph, marked: u64, k: usize) -> Outcome {
    let r = rank_width(g).expect("within the rank-width cap");
    let rd = r.witness.expect("at least two vertices");
    let witness = || format!("{}\nM = {{{}}}, k = {k}\n{}", g6(g), g.labels_of(marked).join(","), rd.tree().to_text(g.labels()));
    match balance_partition(g, &rd, marked, k) {
        Err(e) => Outcome::Fail(failure(g6(g), e.to_string(), witness())),
        Ok((x, y)) => {
            let ok = x | y == g.all_vertices()
                && x & y == 0
                && g.cut_rank_mask(x) <= r.value
                && (x & marked).count_ones() as usize > k
                && (y & marked).count_ones() as usize > k;
            Outcome::check(ok, || failure(g6(g), format!("split {{{}}} violates a postcondition", g.labels_of(x).join(",")), witness()))
        }
    }
}

pub(super) fn balance(ctx: &Context) -> SuiteReport {
    let mut cases: Vec<(Graph, u64, usize)> = Vec::new();
    for g in catalog(ctx).into_iter().filter(|g| g.n() >= 4) {
        for k in (1..).take_while(|k| 3 * k < g.n()) {
            for marked in (0..=g.all_vertices()).filter(|m| m.count_ones() as usize == 3 * k + 1) {
                cases.push((g.clone(), marked, k));
            }
        }
    }
    let exhaustive = cases.len();
    let mut rng = ctx.rng("balance");
    for _ in 0..100 {
        let n = rng.gen_range(7..=10);
        let g = random_graph(&mut rng, n);
        let k = rng.gen_range(1..=(n - 1) / 3);
        let size = rng.gen_range(3 * k + 1..=n);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let marked = verts[..size].iter().fold(0u64, |m, &v| m | 1 << v);
        cases.push((g, marked, k));
    }
    let outcomes = ctx.exec.map(&cases, |(g, marked, k)| balance_check(g, *marked, *k));
    tally(
        "balance",
        outcomes,
        vec![format!(
            "{exhaustive} exhaustive instances (graphs on 4 to 7 vertices, every marked set of size 3k+1) plus 100 random instances on 7 to 10 vertices"
        )],
    )
}

pub(super) fn lrw_square_bound(ctx: &Context) -> SuiteReport {
    let graphs = catalog(ctx);
    let depths = ctx.depths();
    let rows = ctx.exec.map(&graphs, |g| {
        let rd = depths.value(g);
        let lrw = linear_rank_width(g).expect("small graph").value;
        let rw = rank_width(g).expect("small graph").value;
        (rd, lrw, rw)
    });
    let (mut below, mut equal, mut above) = (0, 0, 0);
    let mut outcomes = Vec::with_capacity(rows.len());
    for (g, &(rd, lrw, rw)) in graphs.iter().zip(&rows) {
        match rw.cmp(&rd) {
            std::cmp::Ordering::Less => below += 1,
            std::cmp::Ordering::Equal => equal += 1,
            std::cmp::Ordering::Greater => above += 1,
        }
        outcomes.push(Outcome::check(lrw <= rd * rd, || {
            failure(g6(g), format!("linear rank-width {lrw} exceeds the square of rank-depth {rd}"), g6(g))
        }));
    }
    tally(
        "lrw_square_bound",
        outcomes,
        vec![format!(
            "rank-width versus rank-depth on the same graphs (not asserted): below {below}, equal {equal}, above {above}"
        )],
    )
}

pub(super) fn path_rd_lower(ctx: &Context) -> SuiteReport {
    let mut notes = Vec::new();
    let outcomes = (2..=8)
        .map(|n| {
            let p = generate("path", &[n]).expect("path");
            let rd = ctx.depths().value(&p);
            let nf = n as f64;
            let natural = nf.ln() / (1.0 + 4.0 * nf.ln()).ln();
            let binary = nf.log2() / (1.0 + 4.0 * nf.log2()).log2();
            notes.push(format!("P{n}: rank-depth {rd}, natural-log bound {natural:.4}, base-2 bound {binary:.4}"));
            Outcome::check(rd as f64 > natural && rd as f64 > binary, || {
                failure(format!("P{n}"), format!("rank-depth {rd} does not exceed {natural:.4} and {binary:.4}"), g6(&p))
            })
        })
        .collect();
    tally("path_rd_lower", outcomes, notes)
}
