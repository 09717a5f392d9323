use crate::graph::Graph;

use super::{check_cap, ConnectivitySystem, Decomposition, RankDecomposition, WidthError};

pub const RANK_WIDTH_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthResult {
    pub value: usize,
    pub witness: Option<RankDecomposition>,
}

pub fn rank_width(g: &Graph) -> Result<WidthResult, WidthError> {
    check_cap("vertex count", g.n(), RANK_WIDTH_MAX_VERTICES)?;
    rank_width_of(&ConnectivitySystem::cut_rank(g), RANK_WIDTH_MAX_VERTICES)
}

/// Minimum over cubic trees of the largest edge connectivity.
///
/// `best[L]` is the least width of a rooted binary tree on `L` counting the
/// edge above its root; the unrooted optimum joins the trees of the two
/// sides of some bipartition.
pub fn rank_width_of(sys: &ConnectivitySystem, cap: usize) -> Result<WidthResult, WidthError> {
    let n = sys.n();
    check_cap("ground set size", n, cap)?;
    if n < 2 {
        return Ok(WidthResult { value: 0, witness: None });
    }
    let sys = sys.clone().tabulated();
    let ground = sys.ground();
    let size = ground as usize + 1;
    let mut best = vec![usize::MAX; size];
    let mut split = vec![0u64; size];
    for set in 1..ground {
        if set.count_ones() == 1 {
            best[set as usize] = sys.value(set);
            continue;
        }
        let (w, a) = best_split(set, &best);
        best[set as usize] = w.max(sys.value(set));
        split[set as usize] = a;
    }
    let (value, a) = best_split(ground, &best);
    split[ground as usize] = a;
    Ok(WidthResult {
        value,
        witness: Some(build_tree(n, &split, a, ground ^ a)),
    })
}

/// Best bipartition of `set`; the side holding the lowest element is
/// returned.
fn best_split(set: u64, best: &[usize]) -> (usize, u64) {
    let low = set & set.wrapping_neg();
    let others = set ^ low;
    let mut result = (usize::MAX, 0);
    let mut sub = others;
    loop {
        let a = sub | low;
        if a != set {
            let w = best[a as usize].max(best[(set ^ a) as usize]);
            if w < result.0 {
                result = (w, a);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
    result
}

fn build_tree(n: usize, split: &[u64], a: u64, b: u64) -> RankDecomposition {
    let mut adj = vec![Vec::new(); n];
    let ra = grow(&mut adj, split, a);
    let rb = grow(&mut adj, split, b);
    adj[ra].push(rb);
    adj[rb].push(ra);
    let d = Decomposition::new(adj, (0..n).collect()).expect("binary hierarchy is a tree");
    RankDecomposition::new(d).expect("binary hierarchy is cubic")
}

fn grow(adj: &mut Vec<Vec<usize>>, split: &[u64], set: u64) -> usize {
    if set.count_ones() == 1 {
        return set.trailing_zeros() as usize;
    }
    let node = adj.len();
    adj.push(Vec::new());
    let a = split[set as usize];
    for part in [a, set ^ a] {
        let child = grow(adj, split, part);
        adj[node].push(child);
        adj[child].push(node);
    }
    node
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn rw(name: &str, p: &[usize]) -> usize {
        let g = generate(name, p).unwrap();
        let r = rank_width(&g).unwrap();
        if let Some(t) = &r.witness {
            assert_eq!(t.width(&ConnectivitySystem::cut_rank(&g)), r.value);
        }
        r.value
    }

    #[test]
    fn spec_examples() {
        assert_eq!(rw("path", &[1]), 0);
        assert_eq!(rw("complete", &[5]), 1);
        assert_eq!(rw("cycle", &[5]), 2);
        assert_eq!(rw("complete", &[2]), 1);
        assert_eq!(rw("edgeless", &[2]), 0);
        assert_eq!(rw("path", &[8]), 1);
        assert_eq!(rw("cycle", &[6]), 2);
    }

    #[test]
    fn over_cap_is_a_budget_error() {
        let g = generate("path", &[11]).unwrap();
        assert!(matches!(rank_width(&g), Err(WidthError::Budget { .. })));
    }
}
