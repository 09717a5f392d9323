//! Verification suites: deterministic checks of structural statements about
//! cut-rank, vertex-minors, rank-depth and binary matroids on small
//! instances, with machine-readable reports.

mod catalog;
mod graph_suites;
mod matroid_suites;
mod width_suites;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{write_graph6, Graph};
use crate::par::Execution;
use crate::vertex_minor::DEFAULT_MEMBER_LIMIT;

pub use catalog::{DepthCache, SmallGraphs};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`; run `vmkit verify --list` for the registered names")]
    UnknownSuite(String),
}

/// Knobs shared by every suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub seed: u64,
    /// Orbit member limit for vertex- and pivot-minor searches.
    pub member_limit: usize,
    /// Number of random instances for sampling suites.
    pub random_instances: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            seed: 1,
            member_limit: DEFAULT_MEMBER_LIMIT,
            random_instances: 500,
        }
    }
}

/// One failed or inconclusive instance, with enough data to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
    /// Replayable evidence: a graph6 string plus an operation script or a
    /// decomposition, or a matroid representation.
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub failures: Vec<Failure>,
    pub inconclusives: Vec<Failure>,
    pub notes: Vec<String>,
    /// Omitted unless timings were requested, so that reports are
    /// reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.inconclusive == 0
    }
}

/// Result of checking one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Failure),
    Inconclusive(Failure),
}

impl Outcome {
    pub(crate) fn check(cond: bool, failure: impl FnOnce() -> Failure) -> Outcome {
        if cond {
            Outcome::Pass
        } else {
            Outcome::Fail(failure())
        }
    }
}

pub(crate) fn failure(instance: impl Into<String>, detail: impl Into<String>, witness: impl Into<String>) -> Failure {
    Failure {
        instance: instance.into(),
        detail: detail.into(),
        witness: witness.into(),
    }
}

pub(crate) fn g6(g: &Graph) -> String {
    write_graph6(g)
}

/// Collects outcomes in input order.
pub(crate) fn tally(suite: &str, outcomes: Vec<Outcome>, notes: Vec<String>) -> SuiteReport {
    let mut r = SuiteReport {
        suite: suite.to_string(),
        instances: outcomes.len(),
        passed: 0,
        failed: 0,
        inconclusive: 0,
        failures: Vec::new(),
        inconclusives: Vec::new(),
        notes,
        wall_time_ms: None,
    };
    for o in outcomes {
        match o {
            Outcome::Pass => r.passed += 1,
            Outcome::Fail(f) => {
                r.failed += 1;
                r.failures.push(f);
            }
            Outcome::Inconclusive(f) => {
                r.inconclusive += 1;
                r.inconclusives.push(f);
            }
        }
    }
    r
}

/// Shared state for one run: budget, backend and lazily built caches.
pub struct Context {
    pub budget: Budget,
    pub exec: Execution,
    graphs: std::sync::OnceLock<SmallGraphs>,
    depths: std::sync::OnceLock<DepthCache>,
}

impl Context {
    pub fn new(budget: Budget, exec: Execution) -> Self {
        Context {
            budget,
            exec,
            graphs: Default::default(),
            depths: Default::default(),
        }
    }

    /// Non-isomorphic graphs on up to seven vertices.
    pub fn graphs(&self) -> &SmallGraphs {
        self.graphs.get_or_init(|| SmallGraphs::build(7))
    }

    /// Rank-depth values and witnesses for every graph in [`Context::graphs`].
    pub fn depths(&self) -> &DepthCache {
        self.depths.get_or_init(|| DepthCache::build(self.graphs(), self.exec))
    }

    /// A generator seeded from the run seed and the suite name, so suites do
    /// not depend on each other's consumption.
    pub fn rng(&self, suite: &str) -> ChaCha8Rng {
        let index = SUITES.iter().position(|s| *s == suite).unwrap_or(SUITES.len()) as u64;
        ChaCha8Rng::seed_from_u64(self.budget.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index))
    }
}

/// Random graph with each edge present with probability one half.
pub(crate) fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Registered suite names, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "cutrank_invariance",
    "minor_monotone",
    "pivot_paths",
    "rd_component",
    "rd_separation",
    "rd_merge",
    "balance",
    "halfgraph_p5_free",
    "halfgraph_vm_path",
    "knkn_forbidden",
    "dabrowski_claw",
    "lrw_square_bound",
    "lrw1_equivalence",
    "path_vm_lrw1",
    "path_rd_lower",
    "matroid_fg_identity",
    "fan_fundamental",
    "fan_minor_chain",
    "chi_omega_spot",
];

pub fn run_suite(name: &str, ctx: &Context) -> Result<SuiteReport, VerifyError> {
    let start = Instant::now();
    let mut report = match name {
        "cutrank_invariance" => graph_suites::cutrank_invariance(ctx),
        "minor_monotone" => graph_suites::minor_monotone(ctx),
        "pivot_paths" => graph_suites::pivot_paths(ctx),
        "halfgraph_p5_free" => graph_suites::halfgraph_p5_free(ctx),
        "halfgraph_vm_path" => graph_suites::halfgraph_vm_path(ctx),
        "knkn_forbidden" => graph_suites::knkn_forbidden(ctx),
        "dabrowski_claw" => graph_suites::dabrowski_claw(ctx),
        "lrw1_equivalence" => graph_suites::lrw1_equivalence(ctx),
        "path_vm_lrw1" => graph_suites::path_vm_lrw1(ctx),
        "chi_omega_spot" => graph_suites::chi_omega_spot(ctx),
        "rd_component" => width_suites::rd_component(ctx),
        "rd_separation" => width_suites::rd_separation(ctx),
        "rd_merge" => width_suites::rd_merge(ctx),
        "balance" => width_suites::balance(ctx),
        "lrw_square_bound" => width_suites::lrw_square_bound(ctx),
        "path_rd_lower" => width_suites::path_rd_lower(ctx),
        "matroid_fg_identity" => matroid_suites::matroid_fg_identity(ctx),
        "fan_fundamental" => matroid_suites::fan_fundamental(ctx),
        "fan_minor_chain" => matroid_suites::fan_minor_chain(ctx),
        _ => return Err(VerifyError::UnknownSuite(name.to_string())),
    };
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// A full run over several suites.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub budget: Budget,
    pub all_passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn new(budget: Budget, suites: Vec<SuiteReport>) -> Self {
        RunReport {
            budget,
            all_passed: suites.iter().all(SuiteReport::ok),
            suites,
        }
    }

    pub fn strip_timings(&mut self) {
        for s in &mut self.suites {
            s.wall_time_ms = None;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs `name` or every suite when `name` is `all`.
pub fn run(name: &str, ctx: &Context) -> Result<RunReport, VerifyError> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let suites = names.into_iter().map(|n| run_suite(n, ctx)).collect::<Result<Vec<_>, _>>()?;
    Ok(RunReport::new(ctx.budget, suites))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        let ctx = Context::new(Budget::default(), Execution::Sequential);
        assert!(matches!(run_suite("nope", &ctx), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn tally_counts_add_up() {
        let f = failure("i", "d", "w");
        let r = tally("x", vec![Outcome::Pass, Outcome::Fail(f.clone()), Outcome::Inconclusive(f)], vec![]);
        assert_eq!((r.instances, r.passed, r.failed, r.inconclusive), (3, 1, 1, 1));
        assert!(!r.ok());
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("wall_time"));
    }
}
