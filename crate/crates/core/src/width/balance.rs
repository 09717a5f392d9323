use crate::graph::{Graph, VertexSet};

use super::{RankDecomposition, WidthError};

/// Splits `g` along an edge of `rd` so that both sides hold more than `k`
/// vertices of `marked`.
///
/// Every tree edge with at most `k` marked vertices on one side is oriented
/// away from that side. Walking along arcs from node 0 either meets an edge
/// with more than `k` marked vertices on both sides, which is returned, or
/// reaches a sink; a sink has at most three branches of at most `k` marked
/// vertices each, which `|marked| >= 3k + 1` rules out.
pub fn balance_partition(g: &Graph, rd: &RankDecomposition, marked: VertexSet, k: usize) -> Result<(VertexSet, VertexSet), WidthError> {
    let tree = rd.tree();
    let n = g.n();
    if tree.ground_size() != n {
        return Err(WidthError::Precondition("decomposition does not match the graph".into()));
    }
    let ground = g.all_vertices();
    if marked & !ground != 0 {
        return Err(WidthError::Precondition("marked set contains non-vertices".into()));
    }
    let total = marked.count_ones() as usize;
    if total < 3 * k + 1 || total < 2 {
        return Err(WidthError::Precondition(format!(
            "{total} marked vertices; need at least {} for threshold {k}",
            (3 * k + 1).max(2)
        )));
    }
    let mut from = usize::MAX;
    let mut at = 0;
    loop {
        let mut next = None;
        for &v in tree.neighbors(at) {
            if v == from {
                continue;
            }
            let far = tree.side(at, v);
            let far_marked = (far & marked).count_ones() as usize;
            if far_marked > k && total - far_marked > k {
                return Ok((far, ground & !far));
            }
            if far_marked > k {
                next = Some(v);
                break;
            }
        }
        match next {
            Some(v) => {
                from = at;
                at = v;
            }
            None => unreachable!("a sink would hold at most 3k marked vertices"),
        }
    }
}
