use exactmath::{pade_reconstruct, Dir, Pade, QRat, USeries};
use repforge::HighestWeightData;

use crate::drinfeld::{extract_drinfeld, symmetry_check, DrinfeldResult};
use crate::factored::FactoredRat;
use crate::ClassifyError;

/// Components `μ_i(u)` (expanded in `u^{-1}`) and `μ̄_i(u)` (expanded in `u`)
/// of a highest weight for the twisted q-Yangian of `sp_{2n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredWeight {
    pub mu: FactoredRat,
    pub mubar: FactoredRat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sp2nVerdict {
    Finite(DrinfeldResult),
    NotFD(String),
}

impl Sp2nVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, Sp2nVerdict::Finite(_))
    }
}

/// Reconstructs every component of a highest weight as a factored rational function.
pub fn factor_highest_weight(hw: &HighestWeightData, dmax: usize) -> Result<Vec<FactoredWeight>, ClassifyError> {
    if hw.bar.len() != hw.main.len() {
        return Err(ClassifyError::Invalid("highest weight lacks the μ̄ components".into()));
    }
    hw.main
        .iter()
        .zip(&hw.bar)
        .map(|(m, b)| {
            Ok(FactoredWeight { mu: FactoredRat::from_series(m, dmax)?, mubar: FactoredRat::from_series(b, dmax)? })
        })
        .collect()
}

/// Decides finite-dimensionality of `V(μ(u); μ̄(u))`. On success the
/// constants are normalized by `φ_1 μ_1^{(0)} = q^{-deg P_1 / 2}`, which
/// gives `φ_i = μ_i^{-1} q^{-p_i}` on evaluation modules.
pub fn classify_sp2n(hw: &[FactoredWeight]) -> Result<Sp2nVerdict, ClassifyError> {
    let Some(first) = hw.first() else {
        return Err(ClassifyError::Invalid("empty highest weight".into()));
    };
    for (i, w) in hw.iter().enumerate() {
        if w.mu.neg_order() != 0 || w.mubar.u_power() != 0 {
            return Err(ClassifyError::Invalid(format!("component {} does not start with a nonzero constant", i + 1)));
        }
    }
    let not_fd = |s: String| Ok(Sp2nVerdict::NotFD(s));
    let f = first.mubar.invert_u().div(&first.mu);
    let Some((p1, kappa)) = extract_drinfeld(&f) else {
        return not_fd(format!("μ̄_1(u^-1)/μ_1(u) = {} is not q^-d P(uq²)/P(u)", f));
    };
    if !kappa.is_one() {
        return not_fd(format!("μ̄_1(u^-1)/μ_1(u) = {} has the wrong constant", f));
    }
    if p1.degree() % 2 != 0 || !symmetry_check(&p1) {
        return not_fd(format!("P_1 = {} fails the symmetry condition", p1));
    }
    let half = (p1.degree() / 2) as i32;
    let mut gauge = vec![&QRat::q_pow(-half) / &first.mu.neg_lead()];
    let mut polys = vec![p1];
    for (i, w) in hw.windows(2).enumerate() {
        let g = w[0].mu.div(&w[1].mu);
        let gb = w[0].mubar.div(&w[1].mubar);
        if g != gb {
            return not_fd(format!("μ_{0}/μ_{1} and μ̄_{0}/μ̄_{1} differ", i + 1, i + 2));
        }
        let Some((p, kappa)) = extract_drinfeld(&g) else {
            return not_fd(format!("μ_{}/μ_{} = {} is not a Drinfeld ratio", i + 1, i + 2, g));
        };
        polys.push(p);
        gauge.push(&gauge[i] * &kappa);
    }
    Ok(Sp2nVerdict::Finite(DrinfeldResult { polys, gauge }))
}

/// Solves `μ'_i + q^{2p_i+1} μ_i = 0` for nonnegative integers `p_i`; the
/// verdict also requires `p_1 <= ... <= p_n`.
pub fn fdco_check(mu: &[QRat], mup: &[QRat]) -> (Vec<Option<i64>>, bool) {
    let p: Vec<Option<i64>> = mu
        .iter()
        .zip(mup)
        .map(|(m, mp)| {
            if m.is_zero() {
                return None;
            }
            match (-&(mp / m)).as_signed_q_pow() {
                Some((1, e)) if e >= 1 && e % 2 == 1 => Some(((e - 1) / 2) as i64),
                _ => None,
            }
        })
        .collect();
    let ok = mu.len() == mup.len() && p.iter().all(Option::is_some) && p.windows(2).all(|w| w[0] <= w[1]);
    (p, ok)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioKind {
    /// `ν_i(u)/ν_{i+1}(u) = Q(u)/R(u) = ν̄_i(u)/ν̄_{i+1}(u)`.
    Affine,
    /// In addition `μ̄_1(u^{-1})/μ_1(u) = u^{deg Q} Q(u^{-1})/Q(u)`.
    Twisted,
}

fn as_dir(s: &USeries, dir: Dir) -> USeries {
    USeries::new(dir, s.coeffs().to_vec())
}

/// Rational reconstruction of the highest weight ratios; `None` when some
/// ratio is not a rational function of degree at most `dmax` (or, for
/// the twisted kind, not of the palindromic form).
pub fn ratio_condition_check(kind: RatioKind, main: &[USeries], bar: &[USeries], dmax: usize) -> Option<Vec<Pade>> {
    if main.len() != bar.len() || main.is_empty() {
        return None;
    }
    if main.iter().chain(bar).any(|s| s.cap() < 2 * dmax + 1) {
        return None;
    }
    let mut out = Vec::new();
    for i in 1..main.len() {
        let f_neg = main[i - 1].mul(&main[i].invert().ok()?);
        let f_pos = bar[i - 1].mul(&bar[i].invert().ok()?);
        out.push(pade_reconstruct(&f_neg, &f_pos, dmax)?);
    }
    if kind == RatioKind::Twisted {
        // F(u) = μ̄(u^{-1})/μ(u) satisfies F(u) F(u^{-1}) = 1, which gives its expansion in u
        let f_neg = as_dir(&bar[0], Dir::Neg).mul(&main[0].invert().ok()?);
        let f_pos = as_dir(&f_neg, Dir::Pos).invert().ok()?;
        let pade = pade_reconstruct(&f_neg, &f_pos, dmax)?;
        let d = pade.den.degree()?;
        if d % 2 != 0 || pade.num.scale(&pade.lead) != pade.den.reversed() {
            return None;
        }
        out.insert(0, pade);
    }
    Some(out)
}
