//! R-matrices, RTT presentations of quantum algebras, and a PBW
//! straightening engine driven by rules read off the matrix relations.

mod gens;
mod kappa;
mod parse;
mod presentation;
mod rmatrix;
mod rules;
mod straighten;

pub use gens::{Fam, GenId, NCPoly, Word};
pub use kappa::{elem_sym_det, kappa_independence_check, kappa_l, vandermonde_product, TensorPoly};
pub use parse::parse_element;
pub use presentation::{AffOrder, AlgebraId, Presentation, RawLetters};
pub use rmatrix::{
    g_matrix, partial_transpose_1, partial_transpose_1_uv, perm_matrix, r_const, r_const_t1, r_trig, r_trig_t1,
    trig_inverse_check, trig_swap_check, varsigma, ybe_check, ybe_residual,
};
pub use straighten::{
    confluence_fuzz, relation_residuals, straighten, straighten_with, ConfluenceReport, Mismatch, Strategy,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RttError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("invalid generator: {0}")]
    Generator(String),
    #[error("level {0} exceeds cap {1}")]
    Cap(u32, u32),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("resource limit: {0}")]
    Resource(String),
}
