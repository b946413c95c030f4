//! Exact arithmetic over the rational function field Q(q).
//!
//! [`QRat`] is the base field of every computation in the workspace.
//! [`USeries`] holds truncated series in `u^-1` or `u`, [`Poly`] dense
//! polynomials in `u`, and [`UVPoly`] the small bivariate polynomials that
//! appear as entries of spectral-parameter R-matrices.

mod parse;
mod qpoly;
mod qrat;
mod series;
mod upoly;
mod uvpoly;

pub use parse::parse_qrat;
pub use qpoly::QPoly;
pub use qrat::QRat;
pub use series::{
    dense_kernel, expand_kernel, pade_reconstruct, ratio_expand, series_invert, Dir, Pade, USeries, DEFAULT_CAP,
};
pub use upoly::Poly;
pub use uvpoly::UVPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("division by zero in base field")]
    DivisionByZero,
    #[error("pole at specialization point")]
    PoleAtSpecialization,
    #[error("non-invertible series")]
    NonInvertibleSeries,
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Canonical form of `num / den`.
pub fn qrat_normalize(num: QPoly, den: QPoly) -> Result<QRat, MathError> {
    QRat::normalize(num, den)
}

/// Value of `f` at `q = q0`.
pub fn qrat_eval_at(f: &QRat, q0: &BigRational) -> Result<BigRational, MathError> {
    f.eval_at(q0)
}
