//! Local complementation, pivoting, equivalence orbits, and vertex-/pivot-minor
//! containment.
//!
//! Orbits are explored breadth first over isomorphism classes. Each class
//! keeps one labeled representative together with the operation that first
//! reached it, so any member can be turned back into a replayable script on
//! the seed's labels.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::graph::{canonical_key, members, CanonKey, Graph, GraphError, VertexSet, CANON_MAX_VERTICES};
use crate::par::Execution;

/// Orbit size used when the caller gives no budget.
pub const DEFAULT_MEMBER_LIMIT: usize = 1_000_000;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum VmError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("`{0}` and `{1}` are not adjacent")]
    NotAnEdge(String, String),
    #[error("script line {line}: {message}")]
    Script { line: usize, message: String },
    #[error("member limit must be at least 1")]
    ZeroLimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Local,
    Pivot,
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "local" | "lc" => Ok(Relation::Local),
            "pivot" => Ok(Relation::Pivot),
            _ => Err(format!("unknown relation `{s}` (expected local or pivot)")),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Local => "local",
            Relation::Pivot => "pivot",
        })
    }
}

/// `G * v` on raw rows: toggles every pair of neighbors of `v`.
pub(crate) fn lc_rows(adj: &mut [u64], v: usize) {
    let nbrs = adj[v];
    for x in members(nbrs) {
        adj[x] ^= nbrs & !(1 << x);
    }
}

/// `G ∧ uv = G * u * v * u` on raw rows. Caller guarantees `uv` is an edge.
pub(crate) fn pivot_rows(adj: &mut [u64], u: usize, v: usize) {
    lc_rows(adj, u);
    lc_rows(adj, v);
    lc_rows(adj, u);
}

pub fn local_complement_at(g: &Graph, v: usize) -> Graph {
    let mut adj = g.adjacency().to_vec();
    lc_rows(&mut adj, v);
    g.with_adjacency(adj)
}

/// `G * v`.
pub fn local_complement(g: &Graph, v: &str) -> Result<Graph, VmError> {
    Ok(local_complement_at(g, g.index_of(v)?))
}

pub fn pivot_at(g: &Graph, u: usize, v: usize) -> Result<Graph, VmError> {
    if !g.has_edge(u, v) {
        return Err(VmError::NotAnEdge(g.label(u).to_string(), g.label(v).to_string()));
    }
    let mut adj = g.adjacency().to_vec();
    pivot_rows(&mut adj, u, v);
    Ok(g.with_adjacency(adj))
}

/// `G ∧ uv`.
pub fn pivot(g: &Graph, u: &str, v: &str) -> Result<Graph, VmError> {
    pivot_at(g, g.index_of(u)?, g.index_of(v)?)
}

/// One line of a witness script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    Lc(String),
    Pivot(String, String),
    Keep(Vec<String>),
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Lc(v) => write!(f, "lc {v}"),
            Op::Pivot(u, v) => write!(f, "pivot {u} {v}"),
            Op::Keep(vs) => write!(f, "keep {}", vs.join(",")),
        }
    }
}

/// A replayable sequence of operations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Script(pub Vec<Op>);

impl Script {
    pub fn ops(&self) -> &[Op] {
        &self.0
    }

    /// Applies the script to `g`. `keep` restricts to the listed labels.
    pub fn replay(&self, g: &Graph) -> Result<Graph, VmError> {
        let mut cur = g.clone();
        for (i, op) in self.0.iter().enumerate() {
            let at_line = |e: VmError| VmError::Script { line: i + 1, message: e.to_string() };
            cur = match op {
                Op::Lc(v) => local_complement(&cur, v).map_err(at_line)?,
                Op::Pivot(u, v) => pivot(&cur, u, v).map_err(at_line)?,
                Op::Keep(vs) => cur.induce_labels(vs).map_err(|e| at_line(e.into()))?,
            };
        }
        Ok(cur)
    }

    /// Rewrites every pivot as its three local complementations.
    pub fn expand_pivots(&self) -> Script {
        let mut out = Vec::with_capacity(self.0.len());
        for op in &self.0 {
            match op {
                Op::Pivot(u, v) => {
                    out.push(Op::Lc(u.clone()));
                    out.push(Op::Lc(v.clone()));
                    out.push(Op::Lc(u.clone()));
                }
                other => out.push(other.clone()),
            }
        }
        Script(out)
    }

    pub fn uses_only(&self, relation: Relation) -> bool {
        self.0.iter().all(|op| match op {
            Op::Lc(_) => relation == Relation::Local,
            _ => true,
        })
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.0 {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

impl FromStr for Script {
    type Err = VmError;

    /// Parses `lc <v>`, `pivot <u> <v>` and `keep <v1,...,vk>` lines. Blank
    /// lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut ops = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| VmError::Script { line: i + 1, message };
            let mut words = line.split_whitespace();
            let cmd = words.next().unwrap();
            let args: Vec<&str> = words.collect();
            let op = match (cmd, args.as_slice()) {
                ("lc", [v]) => Op::Lc(v.to_string()),
                ("pivot", [u, v]) => Op::Pivot(u.to_string(), v.to_string()),
                ("keep", []) => Op::Keep(Vec::new()),
                ("keep", [list]) => Op::Keep(list.split(',').filter(|x| !x.is_empty()).map(str::to_string).collect()),
                ("lc" | "pivot" | "keep", _) => return Err(bad(format!("wrong number of arguments for `{cmd}`"))),
                _ => return Err(bad(format!("unknown operation `{cmd}`"))),
            };
            ops.push(op);
        }
        Ok(Script(ops))
    }
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Lc(usize),
    Pivot(usize, usize),
}

#[derive(Debug, Clone)]
struct Member {
    adj: Vec<u64>,
    parent: Option<(usize, Step)>,
}

/// The (partial) equivalence class of a seed graph under local
/// complementation or pivoting, one representative per isomorphism class.
#[derive(Debug, Clone)]
pub struct Orbit {
    seed: Graph,
    relation: Relation,
    members: Vec<Member>,
    index: HashMap<CanonKey, usize>,
    exhausted: bool,
}

impl Orbit {
    pub fn seed(&self) -> &Graph {
        &self.seed
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True iff the whole equivalence class was enumerated within the limit.
    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Representative of member `i`, on the seed's labels.
    pub fn member(&self, i: usize) -> Graph {
        self.seed.with_adjacency(self.members[i].adj.clone())
    }

    pub fn members(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.len()).map(|i| self.member(i))
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonKey> {
        self.index.keys()
    }

    /// Whether some member is isomorphic to `g`.
    pub fn contains(&self, g: &Graph) -> Result<bool, GraphError> {
        Ok(self.index.contains_key(&crate::graph::canonical_form(g)?.key()))
    }

    /// Operations taking the seed to member `i`.
    pub fn script_to(&self, i: usize) -> Script {
        let mut steps = Vec::new();
        let mut cur = i;
        while let Some((parent, step)) = self.members[cur].parent {
            steps.push(step);
            cur = parent;
        }
        steps.reverse();
        let label = |v: usize| self.seed.label(v).to_string();
        Script(
            steps
                .into_iter()
                .map(|s| match s {
                    Step::Lc(v) => Op::Lc(label(v)),
                    Step::Pivot(u, v) => Op::Pivot(label(u), label(v)),
                })
                .collect(),
        )
    }
}

fn successors(adj: &[u64], relation: Relation) -> Vec<(CanonKey, Vec<u64>, Step)> {
    let n = adj.len();
    let mut out = Vec::new();
    match relation {
        Relation::Local => {
            for v in 0..n {
                if adj[v].count_ones() < 2 {
                    continue;
                }
                let mut next = adj.to_vec();
                lc_rows(&mut next, v);
                out.push((canonical_key(&next), next, Step::Lc(v)));
            }
        }
        Relation::Pivot => {
            for u in 0..n {
                for v in members(adj[u] & !crate::bitmatrix::low_mask(u + 1)) {
                    let mut next = adj.to_vec();
                    pivot_rows(&mut next, u, v);
                    out.push((canonical_key(&next), next, Step::Pivot(u, v)));
                }
            }
        }
    }
    out
}

/// Breadth-first exploration, stopping early once `probe` succeeds on a
/// member. Returns the orbit and the first hit (member index, probe value),
/// where "first" is in discovery order.
fn explore<T, F>(seed: &Graph, relation: Relation, limit: usize, exec: Execution, probe: F) -> Result<(Orbit, Option<(usize, T)>), VmError>
where
    T: Send,
    F: Fn(&[u64]) -> Option<T> + Sync + Send,
{
    if limit == 0 {
        return Err(VmError::ZeroLimit);
    }
    if seed.n() > CANON_MAX_VERTICES {
        return Err(GraphError::TooLarge { n: seed.n(), cap: CANON_MAX_VERTICES }.into());
    }
    let mut orbit = Orbit {
        seed: seed.clone(),
        relation,
        members: vec![Member { adj: seed.adjacency().to_vec(), parent: None }],
        index: HashMap::from([(canonical_key(seed.adjacency()), 0)]),
        exhausted: false,
    };
    if let Some(hit) = probe(seed.adjacency()) {
        return Ok((orbit, Some((0, hit))));
    }
    let mut frontier: Vec<usize> = vec![0];
    let mut dropped = false;
    while !frontier.is_empty() && !dropped {
        let expansions = exec.map(&frontier, |&i| successors(&orbit.members[i].adj, relation));
        let mut fresh = Vec::new();
        for (&parent, succ) in frontier.iter().zip(expansions) {
            for (key, adj, step) in succ {
                if orbit.index.contains_key(&key) {
                    continue;
                }
                if orbit.members.len() >= limit {
                    dropped = true;
                    continue;
                }
                let id = orbit.members.len();
                orbit.index.insert(key, id);
                orbit.members.push(Member { adj, parent: Some((parent, step)) });
                fresh.push(id);
            }
        }
        let hits = exec.map(&fresh, |&i| probe(&orbit.members[i].adj));
        if let Some((pos, hit)) = hits.into_iter().enumerate().find_map(|(p, h)| h.map(|h| (p, h))) {
            return Ok((orbit, Some((fresh[pos], hit))));
        }
        frontier = fresh;
    }
    orbit.exhausted = !dropped;
    Ok((orbit, None))
}

/// Enumerates the equivalence class of `g` up to `member_limit` isomorphism
/// classes.
pub fn orbit(g: &Graph, relation: Relation, member_limit: usize) -> Result<Orbit, VmError> {
    orbit_with(g, relation, member_limit, Execution::default())
}

pub fn orbit_with(g: &Graph, relation: Relation, member_limit: usize, exec: Execution) -> Result<Orbit, VmError> {
    let (orbit, _) = explore(g, relation, member_limit, exec, |_| None::<()>)?;
    Ok(orbit)
}

/// Outcome of a containment search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorSearch {
    /// Replaying the script on the host yields a graph isomorphic to the pattern.
    Found(Script),
    /// The whole orbit was searched.
    NotFound,
    /// The member limit cut the search short.
    Inconclusive { explored: usize },
}

impl MinorSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, MinorSearch::Found(_))
    }

    pub fn witness(&self) -> Option<&Script> {
        match self {
            MinorSearch::Found(s) => Some(s),
            _ => None,
        }
    }

    /// `Some(true/false)` when decided, `None` when inconclusive.
    pub fn decided(&self) -> Option<bool> {
        match self {
            MinorSearch::Found(_) => Some(true),
            MinorSearch::NotFound => Some(false),
            MinorSearch::Inconclusive { .. } => None,
        }
    }
}

/// Whether `h` is a vertex-minor of `g`: an induced subgraph of some graph
/// locally equivalent to `g`.
pub fn has_vertex_minor(g: &Graph, h: &Graph, member_limit: usize) -> Result<MinorSearch, VmError> {
    minor_search(g, h, Relation::Local, member_limit, Execution::default())
}

/// Whether `h` is a pivot-minor of `g`.
pub fn has_pivot_minor(g: &Graph, h: &Graph, member_limit: usize) -> Result<MinorSearch, VmError> {
    minor_search(g, h, Relation::Pivot, member_limit, Execution::default())
}

pub fn minor_search(g: &Graph, h: &Graph, relation: Relation, member_limit: usize, exec: Execution) -> Result<MinorSearch, VmError> {
    if h.n() > g.n() {
        return Ok(MinorSearch::NotFound);
    }
    let pattern = h.adjacency();
    let (orbit, hit) = explore(g, relation, member_limit, exec, |adj| crate::graph::induced::find_induced(adj, pattern))?;
    Ok(match hit {
        Some((i, keep)) => {
            let mut script = orbit.script_to(i);
            script.0.push(Op::Keep(g.labels_of(keep)));
            MinorSearch::Found(script)
        }
        None if orbit.is_exhausted() => MinorSearch::NotFound,
        None => MinorSearch::Inconclusive { explored: orbit.len() },
    })
}

/// First pattern (by position) that is a minor of `g`, searching a single
/// orbit for all of them at once.
pub fn first_minor_among(g: &Graph, patterns: &[Graph], relation: Relation, member_limit: usize, exec: Execution) -> Result<(Option<usize>, MinorSearch), VmError> {
    let candidates: Vec<(usize, &Graph)> = patterns.iter().enumerate().filter(|(_, h)| h.n() <= g.n()).collect();
    if candidates.is_empty() {
        return Ok((None, MinorSearch::NotFound));
    }
    let probe = |adj: &[u64]| -> Option<(usize, VertexSet)> {
        candidates
            .iter()
            .find_map(|&(p, h)| crate::graph::induced::find_induced(adj, h.adjacency()).map(|keep| (p, keep)))
    };
    let (orbit, hit) = explore(g, relation, member_limit, exec, probe)?;
    Ok(match hit {
        Some((i, (p, keep))) => {
            let mut script = orbit.script_to(i);
            script.0.push(Op::Keep(g.labels_of(keep)));
            (Some(p), MinorSearch::Found(script))
        }
        None if orbit.is_exhausted() => (None, MinorSearch::NotFound),
        None => (None, MinorSearch::Inconclusive { explored: orbit.len() }),
    })
}

/// Checks a witness: replays it on `g` and compares the result with `h`.
pub fn verify_witness(g: &Graph, h: &Graph, script: &Script) -> Result<bool, VmError> {
    let out = script.replay(g)?;
    Ok(crate::graph::is_isomorphic(&out, h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_labeled_graphs, generate, is_isomorphic};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(name: &str, p: &[usize]) -> Graph {
        generate(name, p).unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
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

    #[test]
    fn local_complement_examples() {
        let p3 = g("path", &[3]);
        assert!(is_isomorphic(&local_complement(&p3, "1").unwrap(), &g("complete", &[3])).unwrap());
        let k3 = g("complete", &[3]);
        let out = local_complement(&k3, "0").unwrap();
        assert_eq!(out.edges(), vec![(0, 1), (0, 2)]);
        assert!(local_complement(&k3, "9").is_err());
    }

    #[test]
    fn local_complement_is_an_involution() {
        for h in all_labeled_graphs(5) {
            for v in 0..5 {
                assert_eq!(local_complement_at(&local_complement_at(&h, v), v), h);
            }
        }
    }

    #[test]
    fn pivot_examples() {
        let p3 = g("path", &[3]);
        let out = pivot(&p3, "0", "1").unwrap();
        assert_eq!(out.edges(), vec![(0, 1), (0, 2)]);
        let c4 = g("cycle", &[4]);
        let out = pivot(&c4, "0", "1").unwrap();
        assert!(is_isomorphic(&out, &g("path", &[4])).unwrap());
        assert!(out.is_bipartite());
        assert!(matches!(pivot(&p3, "0", "2"), Err(VmError::NotAnEdge(_, _))));
    }

    #[test]
    fn pivot_is_symmetric_and_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(2..=9);
            let h = random_graph(&mut rng, n);
            for (u, v) in h.edges() {
                let a = pivot_at(&h, u, v).unwrap();
                assert_eq!(a, pivot_at(&h, v, u).unwrap());
                assert_eq!(pivot_at(&a, u, v).unwrap(), h);
            }
        }
    }

    #[test]
    fn cut_rank_is_invariant_under_local_complementation() {
        for n in 1..=5 {
            for h in all_labeled_graphs(n) {
                for v in 0..n {
                    let lc = local_complement_at(&h, v);
                    for s in 0..1u64 << n {
                        assert_eq!(lc.cut_rank_mask(s), h.cut_rank_mask(s));
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..500 {
            let n = rng.gen_range(6..=12);
            let h = random_graph(&mut rng, n);
            let v = rng.gen_range(0..n);
            let s = rng.gen::<u64>() & h.all_vertices();
            assert_eq!(local_complement_at(&h, v).cut_rank_mask(s), h.cut_rank_mask(s));
        }
    }

    #[test]
    fn pivoting_keeps_graphs_bipartite() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let mut h = Graph::empty(a + b);
            for u in 0..a {
                for v in a..a + b {
                    if rng.gen_bool(0.5) {
                        h.add_edge(u, v);
                    }
                }
            }
            let edges = h.edges();
            if edges.is_empty() {
                continue;
            }
            let (u, v) = edges[rng.gen_range(0..edges.len())];
            assert!(pivot_at(&h, u, v).unwrap().is_bipartite());
        }
    }

    #[test]
    fn orbit_examples() {
        let k2 = orbit(&g("complete", &[2]), Relation::Local, 100).unwrap();
        assert_eq!(k2.len(), 1);
        assert!(k2.is_exhausted());

        let p3 = orbit(&g("path", &[3]), Relation::Local, 100).unwrap();
        assert_eq!(p3.len(), 2);
        assert!(p3.is_exhausted());
        assert!(p3.contains(&g("complete", &[3])).unwrap());

        let c5 = orbit(&g("cycle", &[5]), Relation::Pivot, 1_000_000).unwrap();
        assert!(c5.is_exhausted());
        for m in c5.members() {
            assert_eq!(m.n(), 5);
            assert!((5..=10).contains(&m.edge_count()));
        }
    }

    #[test]
    fn orbit_scripts_replay_to_members() {
        let seed = g("fan", &[5]);
        let o = orbit(&seed, Relation::Local, 10_000).unwrap();
        for i in 0..o.len() {
            assert_eq!(o.script_to(i).replay(&seed).unwrap(), o.member(i));
        }
    }

    #[test]
    fn orbit_limit_is_reported() {
        let o = orbit(&g("path", &[7]), Relation::Local, 3).unwrap();
        assert_eq!(o.len(), 3);
        assert!(!o.is_exhausted());
        assert_eq!(orbit(&g("path", &[2]), Relation::Local, 0).unwrap_err(), VmError::ZeroLimit);
    }

    #[test]
    fn vertex_minor_examples() {
        let p10 = g("path", &[10]);
        let p5 = g("path", &[5]);
        let r = has_vertex_minor(&p10, &p5, 10).unwrap();
        let w = r.witness().unwrap();
        assert_eq!(w.ops().len(), 1, "an induced subpath needs no complementation");
        assert!(verify_witness(&p10, &p5, w).unwrap());

        let k3k3 = g("half_graph", &[1, 1, 3]);
        let p4 = g("path", &[4]);
        let r = has_vertex_minor(&k3k3, &p4, DEFAULT_MEMBER_LIMIT).unwrap();
        assert!(verify_witness(&k3k3, &p4, r.witness().unwrap()).unwrap());

        let r = has_vertex_minor(&g("path", &[6]), &g("cycle", &[5]), DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(r, MinorSearch::NotFound);
    }

    #[test]
    fn pivot_minor_examples() {
        let k2s2 = g("half_graph", &[1, 0, 2]);
        let p3 = g("path", &[3]);
        let r = has_pivot_minor(&k2s2, &p3, DEFAULT_MEMBER_LIMIT).unwrap();
        assert!(verify_witness(&k2s2, &p3, r.witness().unwrap()).unwrap());

        let s3s3 = g("half_graph", &[0, 0, 3]);
        let p6 = g("path", &[6]);
        let r = has_pivot_minor(&s3s3, &p6, DEFAULT_MEMBER_LIMIT).unwrap();
        let w = r.witness().unwrap();
        assert!(w.uses_only(Relation::Pivot));
        assert!(verify_witness(&s3s3, &p6, w).unwrap());
        // the same witness, spelled with local complementations
        assert!(verify_witness(&s3s3, &p6, &w.expand_pivots()).unwrap());

        let r = has_pivot_minor(&g("half_graph", &[1, 1, 4]), &g("path", &[5]), DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(r, MinorSearch::NotFound);
    }

    #[test]
    fn small_budget_is_inconclusive_not_false() {
        let r = has_vertex_minor(&g("path", &[8]), &g("cycle", &[5]), 2).unwrap();
        assert!(matches!(r, MinorSearch::Inconclusive { explored: 2 }));
        assert_eq!(r.decided(), None);
    }

    #[test]
    fn pattern_larger_than_host() {
        assert_eq!(has_vertex_minor(&g("path", &[3]), &g("path", &[4]), 10).unwrap(), MinorSearch::NotFound);
    }

    #[test]
    fn parallel_and_sequential_orbits_agree() {
        let seed = g("half_graph", &[1, 1, 4]);
        let a = orbit_with(&seed, Relation::Pivot, 100_000, Execution::Sequential).unwrap();
        let b = orbit_with(&seed, Relation::Pivot, 100_000, Execution::Parallel).unwrap();
        assert_eq!(a.len(), b.len());
        for i in 0..a.len() {
            assert_eq!(a.member(i), b.member(i));
            assert_eq!(a.script_to(i), b.script_to(i));
        }
    }

    #[test]
    fn script_parsing() {
        let s: Script = "# witness\nlc 3\n\npivot 1 2\nkeep 0,1,4\n".parse().unwrap();
        assert_eq!(s.0, vec![Op::Lc("3".into()), Op::Pivot("1".into(), "2".into()), Op::Keep(vec!["0".into(), "1".into(), "4".into()])]);
        assert_eq!(s.to_string().parse::<Script>().unwrap(), s);
        assert!(matches!("lc".parse::<Script>(), Err(VmError::Script { line: 1, .. })));
        assert!(matches!("lc 1\nflip 2".parse::<Script>(), Err(VmError::Script { line: 2, .. })));
    }
}
