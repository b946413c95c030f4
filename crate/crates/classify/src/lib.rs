//! Combinatorial side of the classification of finite-dimensional
//! irreducible modules: q-spirals and general position for tensor products,
//! Drinfeld polynomials and their extraction from highest weights.

mod drinfeld;
mod factored;
mod sp2n;
mod spiral;
mod upoly;

pub use drinfeld::{
    classify_gl2, drinfeld_eval_gl_n, drinfeld_from_pairs_gl2, drinfeld_sp2_from_pairs, drinfeld_sp2n_eval,
    extract_drinfeld, scalar_string, symmetry_check, DrinfeldResult,
};
pub use factored::{factor_signed_q_pow, FactoredRat};
pub use sp2n::{
    classify_sp2n, factor_highest_weight, fdco_check, ratio_condition_check, FactoredWeight, RatioKind, Sp2nVerdict,
};
pub use spiral::{
    general_position, irr_predicate_affine, irr_predicate_twisted, qspiral_from_pair, PairParam, QSpiral,
};
pub use upoly::UPoly;

pub use repforge::Param;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClassifyError {
    #[error("{0}")]
    Invalid(String),
    #[error("factored form required: {0}")]
    FactoredRequired(String),
    #[error(transparent)]
    Math(#[from] exactmath::MathError),
}
