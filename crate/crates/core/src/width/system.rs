use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::graph::Graph;

use super::WidthError;

/// Ground sets up to this size get a lookup table of all subset values.
pub const TABLE_MAX_ELEMENTS: usize = 22;

type Oracle = dyn Fn(u64) -> usize + Send + Sync;

/// A ground set with a symmetric connectivity function on its subsets.
///
/// Subsets are bitmasks over element positions. The function must satisfy
/// `f(∅) = f(E) = 0` and `f(S) = f(E∖S)`; [`ConnectivitySystem::check_axioms`]
/// samples both.
#[derive(Clone)]
pub struct ConnectivitySystem {
    labels: Arc<[String]>,
    oracle: Arc<Oracle>,
    table: Option<Arc<[u8]>>,
}

impl ConnectivitySystem {
    pub fn from_fn<F>(labels: Vec<String>, f: F) -> Self
    where
        F: Fn(u64) -> usize + Send + Sync + 'static,
    {
        assert!(labels.len() <= 64);
        ConnectivitySystem {
            labels: labels.into(),
            oracle: Arc::new(f),
            table: None,
        }
    }

    /// The cut-rank function of `g`.
    pub fn cut_rank(g: &Graph) -> Self {
        let h = g.clone();
        Self::from_fn(g.labels().to_vec(), move |s| h.cut_rank_mask(s))
    }

    /// Precomputes every subset value when the ground set is small enough.
    pub fn tabulated(mut self) -> Self {
        let n = self.n();
        if self.table.is_none() && n <= TABLE_MAX_ELEMENTS {
            let table: Vec<u8> = (0..1u64 << n).map(|s| (self.oracle)(s).min(255) as u8).collect();
            self.table = Some(table.into());
        }
        self
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ground(&self) -> u64 {
        crate::bitmatrix::low_mask(self.n())
    }

    #[inline]
    pub fn value(&self, set: u64) -> usize {
        match &self.table {
            Some(t) => t[set as usize] as usize,
            None => (self.oracle)(set),
        }
    }

    /// Checks `f(∅) = f(E) = 0`, then symmetry on `samples` random subsets
    /// (all subsets when the ground set is small).
    pub fn check_axioms<R: Rng>(&self, rng: &mut R, samples: usize) -> Result<(), WidthError> {
        let ground = self.ground();
        if self.value(0) != 0 || self.value(ground) != 0 {
            return Err(WidthError::Precondition("connectivity of the empty or full set is nonzero".into()));
        }
        let check = |s: u64| {
            if self.value(s) != self.value(ground & !s) {
                Err(WidthError::Precondition(format!("connectivity is not symmetric at {s:#b}")))
            } else {
                Ok(())
            }
        };
        if self.n() <= 12 {
            (0..=ground).try_for_each(check)
        } else {
            (0..samples).try_for_each(|_| check(rng.gen::<u64>() & ground))
        }
    }
}

impl fmt::Debug for ConnectivitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConnectivitySystem")
            .field("labels", &self.labels)
            .field("tabulated", &self.table.is_some())
            .finish()
    }
}
