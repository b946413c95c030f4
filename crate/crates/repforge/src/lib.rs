//! Exact representations of the RTT algebras: Verma quotients, evaluation
//! and tensor-product modules, twisted restriction, and the tools to test
//! them (relation residuals, singular vectors, cyclic spans, irreducibility).

mod analysis;
mod construct;
mod module;
mod param;
mod verify;
mod verma;

pub use analysis::{
    cyclic_span, highest_weight_of, invariant_subspace, is_irreducible, mu_prime_from, raising_letters,
    singular_vectors, HighestWeightData,
};
pub use construct::{
    dual, eval_affine, sbar_from_s, tensor, trivial_module, twist_by_series, twisted_eval, twisted_restrict,
};
pub use module::ModuleRep;
pub use param::Param;
pub use verify::{verify_relations, ResidualFailure, ResidualReport};
pub use verma::{gl2_finite_module, uqsp2_module, DEFAULT_DEPTH};

use rttcore::RttError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("no singular vector within depth {0}")]
    NotFinite(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cap mismatch: {0} vs {1}")]
    CapMismatch(u32, u32),
    #[error("not a highest vector: {0}")]
    NotHighest(String),
    #[error(transparent)]
    Rtt(#[from] RttError),
    #[error("malformed module file: {0}")]
    Json(String),
}
