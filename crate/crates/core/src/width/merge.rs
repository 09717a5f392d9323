use crate::graph::{members, Graph, VertexSet};

use super::{ConnectivitySystem, Decomposition, WidthError};

/// A decomposition of one connected component.
///
/// `elements[i]` is the vertex of the host graph carried by ground element
/// `i` of `decomposition`. Single-vertex components carry no decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartDecomposition {
    pub elements: Vec<usize>,
    pub decomposition: Option<Decomposition>,
}

impl PartDecomposition {
    pub fn singleton(v: usize) -> Self {
        PartDecomposition {
            elements: vec![v],
            decomposition: None,
        }
    }

    /// Singleton parts for every vertex of `set`.
    pub fn singletons(set: VertexSet) -> Vec<Self> {
        members(set).map(Self::singleton).collect()
    }

    fn mask(&self) -> VertexSet {
        self.elements.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// Joins decompositions of the components on both sides of a cut.
///
/// Two new adjacent hubs are created; the center of every component's tree
/// on the `side` half is joined to the first hub, the others to the second.
/// The result is checked to have radius at most `m + 2` and width at most
/// `m + d`.
pub fn merge_decomposition(
    g: &Graph,
    side: VertexSet,
    parts_side: &[PartDecomposition],
    parts_rest: &[PartDecomposition],
    m: usize,
    d: usize,
) -> Result<Decomposition, WidthError> {
    let err = |s: String| Err(WidthError::Merge(s));
    let ground = g.all_vertices();
    let rest = ground & !side;
    if side == 0 || rest == 0 || side & !ground != 0 {
        return err("the cut must split the vertex set into two nonempty sides".into());
    }
    if d == 0 {
        return err("the cut bound must be at least 1".into());
    }
    let cut = g.cut_rank_mask(side);
    if cut > d {
        return err(format!("cut-rank {cut} exceeds the bound {d}"));
    }
    check_parts(g, side, parts_side, m)?;
    check_parts(g, rest, parts_rest, m)?;

    let n = g.n();
    let mut adj = vec![Vec::new(); n + 2];
    let link = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    link(&mut adj, n, n + 1);
    for (hub, parts) in [(n, parts_side), (n + 1, parts_rest)] {
        for part in parts {
            let anchor = match &part.decomposition {
                None => part.elements[0],
                Some(t) => graft(&mut adj, t, &part.elements),
            };
            link(&mut adj, hub, anchor);
        }
    }
    let merged = Decomposition::new(adj, (0..n).collect())?;
    let sys = ConnectivitySystem::cut_rank(g).tabulated();
    let (width, radius) = (merged.width(&sys)?, merged.radius());
    if radius > m + 2 {
        return err(format!("merged radius {radius} exceeds {}", m + 2));
    }
    if width > m + d {
        return err(format!("merged width {width} exceeds {}", m + d));
    }
    Ok(merged)
}

/// Copies `t` into `adj` with leaves mapped to `elements`; returns the node
/// to attach the hub to.
fn graft(adj: &mut Vec<Vec<usize>>, t: &Decomposition, elements: &[usize]) -> usize {
    if t.node_count() == 2 {
        // Both nodes are leaves; attach through a fresh middle node.
        let mid = adj.len();
        adj.push(Vec::new());
        for &v in elements {
            adj[mid].push(v);
            adj[v].push(mid);
        }
        return mid;
    }
    let mut id = vec![usize::MAX; t.node_count()];
    for (i, &v) in elements.iter().enumerate() {
        id[t.leaf_of(i)] = v;
    }
    for slot in id.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = adj.len();
        adj.push(Vec::new());
    }
    for u in 0..t.node_count() {
        for &w in t.neighbors(u) {
            adj[id[u]].push(id[w]);
        }
    }
    id[t.center()]
}

fn check_parts(g: &Graph, within: VertexSet, parts: &[PartDecomposition], m: usize) -> Result<(), WidthError> {
    let err = |s: String| Err(WidthError::Merge(s));
    let mut expected: Vec<VertexSet> = g.components_within(within);
    let mut given: Vec<VertexSet> = parts.iter().map(PartDecomposition::mask).collect();
    expected.sort_unstable();
    given.sort_unstable();
    if expected != given || parts.iter().any(|p| p.mask().count_ones() as usize != p.elements.len()) {
        return err("part decompositions do not match the components of the side".into());
    }
    for part in parts {
        let size = part.elements.len();
        match &part.decomposition {
            None if size == 1 => {}
            None => return err("a component with several vertices needs a decomposition".into()),
            Some(t) => {
                if t.ground_size() != size {
                    return err("decomposition ground size differs from its component".into());
                }
                let sub = induce_in_order(g, &part.elements);
                let sys = ConnectivitySystem::cut_rank(&sub);
                let (w, r) = (t.width(&sys)?, t.radius());
                if w > m || r > m {
                    return err(format!("component decomposition has width {w} and radius {r}, above {m}"));
                }
            }
        }
    }
    Ok(())
}

fn induce_in_order(g: &Graph, elements: &[usize]) -> Graph {
    let mut h = Graph::empty(elements.len());
    for (i, &u) in elements.iter().enumerate() {
        for (j, &v) in elements.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j);
            }
        }
    }
    h
}
