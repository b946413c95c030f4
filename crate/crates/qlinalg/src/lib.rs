//! Sparse exact linear algebra over Q(q).
//!
//! Matrices are row maps of [`QRat`](exactmath::QRat) entries. Elimination
//! pivots on the smallest entry in each column to keep rational functions
//! small. [`envelope_dimension`] computes the dimension of the unital matrix
//! algebra generated by a set of matrices, the irreducibility oracle used by
//! the module layer.

mod elim;
mod envelope;
mod mat;
mod matuv;

pub use elim::{kernel, rank, rref, Rref, VecSpace};
pub use envelope::{envelope_dimension, envelope_dimension_specialized, FpMat, FpSpace, PRIME};
pub use mat::{kron, place_on_legs, Mat, SparseVec};
pub use matuv::MatUV;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("{0}")]
    Legs(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("bad matrix format: {0}")]
    Format(String),
}
