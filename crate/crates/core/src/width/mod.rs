//! Width parameters over symmetric connectivity functions.

mod balance;
mod decomposition;
mod linear;
mod merge;
mod rank_depth;
mod rank_width;
mod system;

#[cfg(any(test, feature = "oracles"))]
pub mod oracle;

use thiserror::Error;

use crate::graph::GraphError;

pub use balance::balance_partition;
pub use decomposition::{Decomposition, RankDecomposition, DEFAULT_DEGREE_CAP};
pub use linear::{linear_rank_width, linear_width_of, ordering_width, LinearWidth, LRW_MAX_VERTICES};
pub use merge::{merge_decomposition, PartDecomposition};
pub use rank_depth::{rank_depth, rank_depth_of, DepthResult, RANK_DEPTH_MAX_VERTICES};
pub use rank_width::{rank_width, rank_width_of, WidthResult, RANK_WIDTH_MAX_VERTICES};
pub use system::{ConnectivitySystem, TABLE_MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WidthError {
    #[error("node {0} is a leaf or does not exist")]
    InvalidNode(usize),
    #[error("{what} is {size}, above the exact-computation cap of {cap}")]
    Budget { what: &'static str, size: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("merge failed: {0}")]
    Merge(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<(), WidthError> {
    if size > cap {
        Err(WidthError::Budget { what, size, cap })
    } else {
        Ok(())
    }
}
