use crate::graph::Graph;

use super::{check_cap, ConnectivitySystem, WidthError};

pub const LRW_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearWidth {
    pub value: usize,
    /// An optimal ordering of the ground set.
    pub ordering: Vec<usize>,
}

pub fn linear_rank_width(g: &Graph) -> Result<LinearWidth, WidthError> {
    check_cap("vertex count", g.n(), LRW_MAX_VERTICES)?;
    linear_width_of(&ConnectivitySystem::cut_rank(g), LRW_MAX_VERTICES)
}

/// Prefix-subset DP: `best[S]` is the least width of an ordering of `S`
/// placed first.
pub fn linear_width_of(sys: &ConnectivitySystem, cap: usize) -> Result<LinearWidth, WidthError> {
    let n = sys.n();
    check_cap("ground set size", n, cap)?;
    if n < 2 {
        return Ok(LinearWidth { value: 0, ordering: (0..n).collect() });
    }
    let sys = sys.clone().tabulated();
    let ground = sys.ground();
    let mut best = vec![0usize; ground as usize + 1];
    let mut last = vec![0u8; ground as usize + 1];
    for set in 1..=ground {
        let mut pick = (usize::MAX, 0);
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let w = best[(set ^ (1 << v)) as usize];
            if w < pick.0 {
                pick = (w, v);
            }
        }
        best[set as usize] = pick.0.max(sys.value(set));
        last[set as usize] = pick.1 as u8;
    }
    let mut ordering = Vec::with_capacity(n);
    let mut set = ground;
    while set != 0 {
        let v = last[set as usize];
        ordering.push(v as usize);
        set ^= 1 << v;
    }
    ordering.reverse();
    Ok(LinearWidth {
        value: best[ground as usize],
        ordering,
    })
}

/// Largest prefix connectivity of an ordering.
pub fn ordering_width(sys: &ConnectivitySystem, ordering: &[usize]) -> Result<usize, WidthError> {
    let mut seen = 0u64;
    for &v in ordering {
        if v >= sys.n() || seen >> v & 1 == 1 {
            return Err(WidthError::Precondition("ordering is not a permutation of the ground set".into()));
        }
        seen |= 1 << v;
    }
    if seen != sys.ground() {
        return Err(WidthError::Precondition("ordering is not a permutation of the ground set".into()));
    }
    let mut prefix = 0u64;
    let mut width = 0;
    for &v in ordering {
        prefix |= 1 << v;
        width = width.max(sys.value(prefix));
    }
    Ok(width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn lrw(name: &str, p: &[usize]) -> usize {
        let g = generate(name, p).unwrap();
        let r = linear_rank_width(&g).unwrap();
        let sys = ConnectivitySystem::cut_rank(&g);
        assert_eq!(ordering_width(&sys, &r.ordering).unwrap(), r.value);
        r.value
    }

    #[test]
    fn spec_examples() {
        assert_eq!(lrw("path", &[1]), 0);
        assert_eq!(lrw("path", &[6]), 1);
        assert_eq!(lrw("cycle", &[5]), 2);
        assert_eq!(lrw("complete", &[7]), 1);
        assert_eq!(lrw("edgeless", &[4]), 0);
        assert_eq!(lrw("path", &[16]), 1);
    }

    #[test]
    fn bad_orderings_are_rejected() {
        let sys = ConnectivitySystem::cut_rank(&generate("path", &[4]).unwrap());
        assert!(ordering_width(&sys, &[0, 1, 2]).is_err());
        assert!(ordering_width(&sys, &[0, 1, 1, 2]).is_err());
        assert_eq!(ordering_width(&sys, &[0, 2, 1, 3]).unwrap(), 2);
    }

    #[test]
    fn over_cap_is_a_budget_error() {
        let g = generate("path", &[17]).unwrap();
        assert!(matches!(linear_rank_width(&g), Err(WidthError::Budget { .. })));
    }
}
