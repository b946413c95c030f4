//! Irreducible quotients of Verma modules over `U_q(gl_2)` and `U'_q(sp_2)`,
//! computed by straightening `x · y^k` for every generator `x` and the
//! lowering generator `y`.

use std::collections::BTreeMap;

use exactmath::QRat;
use qlinalg::Mat;
use rttcore::{straighten, AlgebraId, GenId, NCPoly, Presentation, Word};

use crate::module::{stored_letters, ModuleRep};
use crate::RepError;

pub const DEFAULT_DEPTH: usize = 12;

struct Verma {
    p: Presentation,
    lowering: GenId,
    eigen: Vec<(GenId, QRat)>,
    raising: Vec<GenId>,
}

impl Verma {
    /// `x · y^k ζ` in the basis `y^j ζ`.
    fn act(&self, x: &Word, k: usize) -> Result<BTreeMap<usize, QRat>, RepError> {
        let w = x.concat(&Word::letter(self.lowering, k as i32));
        let nf = straighten(&self.p, &NCPoly::word(w), 0)?;
        let mut out: BTreeMap<usize, QRat> = BTreeMap::new();
        'terms: for (w, c) in nf.terms() {
            let mut coef = c.clone();
            let mut index = 0usize;
            let f = w.factors();
            for (pos, &(g, e)) in f.iter().enumerate().rev() {
                if g == self.lowering && pos == 0 {
                    index = e as usize;
                } else if self.raising.contains(&g) {
                    continue 'terms;
                } else if let Some((_, lam)) = self.eigen.iter().find(|(h, _)| *h == g) {
                    coef = &coef * &lam.pow(e);
                } else {
                    return Err(RepError::Invalid(format!("unexpected ordered word {} in {}", w, self.p)));
                }
            }
            let e = out.entry(index).or_default();
            *e += coef;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn is_singular(&self, k: usize) -> Result<bool, RepError> {
        for &g in &self.raising {
            if !self.act(&Word::letter(g, 1), k)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Quotient by the submodule generated by the first singular vector `y^k ζ`, `k >= 1`.
    fn build(&self, depth: usize) -> Result<ModuleRep, RepError> {
        if depth < 1 {
            return Err(RepError::Invalid("depth must be at least 1".into()));
        }
        let mut dim = None;
        for k in 1..=depth {
            if self.is_singular(k)? {
                dim = Some(k);
                break;
            }
        }
        let dim = dim.ok_or(RepError::NotFinite(depth))?;
        let mut actions = BTreeMap::new();
        for g in stored_letters(&self.p, 0) {
            let (h, s) = self.p.to_target(g);
            let x = Word::letter(h, s);
            let mut m = Mat::zeros(dim, dim);
            for k in 0..dim {
                for (i, c) in self.act(&x, k)? {
                    if i < dim {
                        m.set(i, k, c);
                    }
                }
            }
            actions.insert(g, m);
        }
        ModuleRep::new(self.p.clone(), dim, 0, actions, Some(0))
    }
}

/// Irreducible `U_q(gl_2)`-module with highest weight `(α, β)`: `t̄_12 ζ = 0`,
/// `t_11 ζ = α ζ`, `t_22 ζ = β ζ`, built on `t_21^k ζ`.
pub fn gl2_finite_module(alpha: &QRat, beta: &QRat, depth: usize) -> Result<ModuleRep, RepError> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(RepError::Invalid("highest weight components must be nonzero".into()));
    }
    Verma {
        p: Presentation::new(AlgebraId::Uqgl, 2)?,
        lowering: GenId::t(2, 1, 0),
        eigen: vec![(GenId::t(1, 1, 0), alpha.clone()), (GenId::t(2, 2, 0), beta.clone())],
        raising: vec![GenId::tb(1, 2, 0)],
    }
    .build(depth)
}

/// Irreducible `U'_q(sp_2)`-module with highest weight `(μ; μ')`:
/// `s_11 ξ = 0`, `s_21 ξ = μ ξ`, `s_12 ξ = μ' ξ`, built on `s_22^k ξ`.
pub fn uqsp2_module(mu: &QRat, mu_prime: &QRat, depth: usize) -> Result<ModuleRep, RepError> {
    if mu_prime.is_zero() {
        return Err(RepError::Invalid("μ' must be nonzero".into()));
    }
    Verma {
        p: Presentation::new(AlgebraId::Uqsp, 2)?,
        lowering: GenId::s(2, 2, 0),
        eigen: vec![(GenId::s(2, 1, 0), mu.clone()), (GenId::s(1, 2, 0), mu_prime.clone())],
        raising: vec![GenId::s(1, 1, 0)],
    }
    .build(depth)
}
