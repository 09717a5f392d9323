use std::collections::HashMap;

use crate::graph::{canonical_form, nonisomorphic_graphs, CanonKey, Graph};
use crate::par::Execution;
use crate::width::{rank_depth, Decomposition};

/// Non-isomorphic graphs grouped by vertex count, each in canonical labeling.
pub struct SmallGraphs {
    by_size: Vec<Vec<Graph>>,
}

impl SmallGraphs {
    pub fn build(max_n: usize) -> Self {
        SmallGraphs {
            by_size: (0..=max_n).map(nonisomorphic_graphs).collect(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn of_size(&self, n: usize) -> &[Graph] {
        &self.by_size[n]
    }

    /// Every class on `1..=n` vertices, smallest first.
    pub fn up_to(&self, n: usize) -> Vec<Graph> {
        (1..=n.min(self.max_n())).flat_map(|k| self.by_size[k].iter().cloned()).collect()
    }
}

/// Rank-depth values and optimal decompositions keyed by isomorphism class.
pub struct DepthCache {
    entries: HashMap<CanonKey, (usize, Option<Decomposition>)>,
}

impl DepthCache {
    pub fn build(graphs: &SmallGraphs, exec: Execution) -> Self {
        let all = graphs.up_to(graphs.max_n());
        let computed = exec.map(&all, |g| {
            let r = rank_depth(g).expect("catalog graphs are within the rank-depth cap");
            (canonical_form(g).expect("catalog graphs canonize").key(), (r.value, r.witness))
        });
        DepthCache {
            entries: computed.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rank-depth of `g`, from the cache when its class is present.
    pub fn value(&self, g: &Graph) -> usize {
        if g.n() < 2 {
            return 0;
        }
        match canonical_form(g).ok().and_then(|c| self.entries.get(&c.key())) {
            Some((v, _)) => *v,
            None => rank_depth(g).expect("within the rank-depth cap").value,
        }
    }

    /// Value and optimal decomposition of `g`. Ground element `i` of the
    /// decomposition is vertex `elements[i]` of `g`.
    pub fn witness(&self, g: &Graph) -> (usize, Option<(Vec<usize>, Decomposition)>) {
        if g.n() < 2 {
            return (0, None);
        }
        if let Ok(c) = canonical_form(g) {
            if let Some((v, Some(d))) = self.entries.get(&c.key()) {
                return (*v, Some((c.relabeling().to_vec(), d.clone())));
            }
        }
        let r = rank_depth(g).expect("within the rank-depth cap");
        (r.value, r.witness.map(|d| ((0..g.n()).collect(), d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::width::ConnectivitySystem;

    #[test]
    fn cached_witnesses_transfer_to_relabeled_graphs() {
        let graphs = SmallGraphs::build(5);
        let cache = DepthCache::build(&graphs, Execution::Sequential);
        assert_eq!(cache.len(), 1 + 2 + 4 + 11 + 34);
        let g = Graph::from_edges(5, &[(3, 1), (1, 4), (4, 0), (0, 2)]);
        let (v, w) = cache.witness(&g);
        assert_eq!(v, rank_depth(&generate("path", &[5]).unwrap()).unwrap().value);
        let (elements, d) = w.unwrap();
        // re-express the cut-rank in the decomposition's element order
        let mut h = Graph::empty(5);
        for i in 0..5 {
            for j in i + 1..5 {
                if g.has_edge(elements[i], elements[j]) {
                    h.add_edge(i, j);
                }
            }
        }
        let sys = ConnectivitySystem::cut_rank(&h);
        assert!(d.width(&sys).unwrap() <= v && d.radius() <= v);
    }
}
