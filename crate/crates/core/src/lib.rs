//! Exact computations in the vertex-minor calculus of small graphs over
//! GF(2): cut-rank, local complementation and pivoting, vertex- and
//! pivot-minor search, rank-depth, rank-width, linear rank-width, and
//! branch-depth of binary matroids, plus the verification suites that
//! exercise them.

pub mod bitmatrix;
pub mod coloring;
pub mod graph;
pub mod matroid;
pub mod par;
pub mod verify;
pub mod vertex_minor;
pub mod width;

pub use bitmatrix::BitMatrix;
pub use graph::{Graph, GraphError, VertexSet};
