//! Evaluation, tensor-product, twisted-restriction and twisting constructions.

use std::collections::BTreeMap;

use exactmath::{Dir, QRat, USeries};
use qlinalg::{kron, Mat};
use rttcore::{AlgebraId, Fam, GenId, Presentation};

use crate::module::{stored_letters, ModuleRep};
use crate::RepError;

fn require(m: &ModuleRep, ids: &[AlgebraId], what: &str) -> Result<(), RepError> {
    if ids.contains(&m.presentation().id()) {
        Ok(())
    } else {
        Err(RepError::Invalid(format!("{} needs a module over {}, got {}", what, names(ids), m.presentation())))
    }
}

fn names(ids: &[AlgebraId]) -> String {
    ids.iter().map(|i| i.name()).collect::<Vec<_>>().join(" or ")
}

/// Pulls a `U_q(gl_N)`-module back along `T(u) ↦ T + T̄u⁻¹`, `T̄(u) ↦ T̄ + Tu`.
pub fn eval_affine(m: &ModuleRep, cap: u32) -> Result<ModuleRep, RepError> {
    require(m, &[AlgebraId::Uqgl, AlgebraId::UqglExt], "eval_affine")?;
    let id = if m.presentation().id().is_ext() { AlgebraId::UqaffExt } else { AlgebraId::Uqaff };
    let p = Presentation::new(id, m.presentation().n())?;
    let mut actions = BTreeMap::new();
    for g in stored_letters(&p, cap) {
        let other = if g.fam == Fam::T { Fam::TBar } else { Fam::T };
        let mat = match g.r {
            0 => m.action(GenId::new(g.fam, g.row(), g.col(), 0))?,
            1 => m.action(GenId::new(other, g.row(), g.col(), 0))?,
            _ => Mat::zeros(m.dim(), m.dim()),
        };
        actions.insert(g, mat);
    }
    ModuleRep::new(p, m.dim(), cap, actions, m.highest_index())
}

/// One-dimensional module `T(u) ↦ 1`, `T̄(u) ↦ 1`, the unit for [`tensor`].
pub fn trivial_module(p: &Presentation, cap: u32) -> Result<ModuleRep, RepError> {
    if !p.id().is_gl_type() {
        return Err(RepError::Invalid(format!("no trivial module constructed for {}", p)));
    }
    let actions = stored_letters(p, cap)
        .into_iter()
        .map(|g| (g, if g.i == g.j && g.r == 0 { Mat::identity(1) } else { Mat::zeros(1, 1) }))
        .collect();
    ModuleRep::new(p.clone(), 1, cap, actions, Some(0))
}

/// Tensor product through `Δ(t_ij(u)) = Σ_k t_ik(u) ⊗ t_kj(u)` (and the same
/// for `t̄`), truncated at the common cap.
pub fn tensor(a: &ModuleRep, b: &ModuleRep) -> Result<ModuleRep, RepError> {
    let (pa, pb) = (a.presentation(), b.presentation());
    if !pa.id().is_gl_type() || pa.id() != pb.id() || pa.n() != pb.n() {
        return Err(RepError::Invalid(format!("cannot tensor modules over {} and {}", pa, pb)));
    }
    if a.cap() != b.cap() {
        return Err(RepError::CapMismatch(a.cap(), b.cap()));
    }
    let n = pa.n();
    let dim = a.dim() * b.dim();
    let mut actions = BTreeMap::new();
    for g in stored_letters(pa, a.cap()) {
        let mut acc = Mat::zeros(dim, dim);
        for k in 1..=n {
            for r1 in 0..=g.r {
                let x = a.action(GenId::new(g.fam, g.row(), k, r1))?;
                if x.is_zero() {
                    continue;
                }
                let y = b.action(GenId::new(g.fam, k, g.col(), g.r - r1))?;
                if !y.is_zero() {
                    acc = acc.add(&kron(&x, &y));
                }
            }
        }
        actions.insert(g, acc);
    }
    let top = a.highest_index().zip(b.highest_index()).map(|(i, j)| i * b.dim() + j);
    ModuleRep::new(pa.clone(), dim, a.cap(), actions, top)
}

fn check_zero_letters(
    p: &Presentation,
    cap: u32,
    f: &mut dyn FnMut(GenId) -> Result<Mat, RepError>,
) -> Result<(), RepError> {
    for g in p.raw_letters(cap).zero {
        if !f(g)?.is_zero() {
            return Err(RepError::Invalid(format!("{} should act by zero", g)));
        }
    }
    Ok(())
}

/// Restriction of a `U_q(ĝl_2n)`-module to the twisted q-Yangian through
/// `S(u) = T(u) G T̄(u⁻¹)^t` and `S̄(u) = T̄(u) G T(u⁻¹)^t`.
pub fn twisted_restrict(m: &ModuleRep) -> Result<ModuleRep, RepError> {
    require(m, &[AlgebraId::Uqaff, AlgebraId::UqaffExt], "twisted_restrict")?;
    let nn = m.presentation().n();
    if nn % 2 == 1 {
        return Err(RepError::Invalid("twisted restriction needs even N".into()));
    }
    let cap = m.cap();
    let q = QRat::q();
    // Σ_{k+l=r} Σ_a (q x_{i,2a-1}^{(k)} y_{j,2a}^{(l)} - x_{i,2a}^{(k)} y_{j,2a-1}^{(l)})
    let quad = |x: Fam, y: Fam, i: usize, j: usize, r: u32| -> Result<Mat, RepError> {
        let mut acc = Mat::zeros(m.dim(), m.dim());
        for k in 0..=r {
            for a in 1..=nn / 2 {
                let p1 = m.action(GenId::new(x, i, 2 * a - 1, k))?.mul(&m.action(GenId::new(y, j, 2 * a, r - k))?);
                let p2 = m.action(GenId::new(x, i, 2 * a, k))?.mul(&m.action(GenId::new(y, j, 2 * a - 1, r - k))?);
                acc = acc.add(&p1.scale(&q)).sub(&p2);
            }
        }
        Ok(acc)
    };
    let p = Presentation::new(AlgebraId::Yqsp, nn)?;
    let mut actions = BTreeMap::new();
    for g in stored_letters(&p, cap) {
        let mat = match g.fam {
            Fam::S => quad(Fam::T, Fam::TBar, g.row(), g.col(), g.r)?,
            _ => quad(Fam::TBar, Fam::T, g.row(), g.col(), g.r)?,
        };
        actions.insert(g, mat);
    }
    check_zero_letters(&p, cap, &mut |g| quad(Fam::T, Fam::TBar, g.row(), g.col(), g.r))?;
    ModuleRep::new(p, m.dim(), cap, actions, m.highest_index())
}

/// Coefficients `s̄_ij^{(r)}`, `r <= cap`, determined by the `s_ij^{(r)}`
/// through the relation
/// `(u⁻¹q - uq⁻¹) s̄_ij(u) = (uq^δ - u⁻¹q^{-δ}) s_ji(u⁻¹) + (q - q⁻¹)(u⁻¹δ_{i<j} + uδ_{j<i}) s_ij(u⁻¹)`.
pub(crate) fn sbar_coefficients(
    nn: usize,
    cap: u32,
    dim: usize,
    s: &mut dyn FnMut(usize, usize, u32) -> Result<Mat, RepError>,
) -> Result<BTreeMap<GenId, Mat>, RepError> {
    let q = QRat::q();
    let qq = QRat::q_minus_qinv();
    let mut out = BTreeMap::new();
    for i in 1..=nn {
        for j in 1..=nn {
            let d = (i == j) as i32;
            let mut a = |x: usize, y: usize, m: i64| -> Result<Mat, RepError> {
                if m < 0 {
                    Ok(Mat::zeros(dim, dim))
                } else {
                    s(x, y, m as u32)
                }
            };
            // u times the right-hand side, coefficient of u^m
            let mut un = |m: i64| -> Result<Mat, RepError> {
                let mut acc = a(j, i, m - 2)?.scale(&QRat::q_pow(d)).sub(&a(j, i, m)?.scale(&QRat::q_pow(-d)));
                if i < j {
                    acc = acc.add(&a(i, j, m)?.scale(&qq));
                }
                if j < i {
                    acc = acc.add(&a(i, j, m - 2)?.scale(&qq));
                }
                Ok(acc)
            };
            let mut prev: Vec<Mat> = Vec::new();
            for r in 0..=cap as i64 {
                // q s̄^{(r)} - q⁻¹ s̄^{(r-2)} = [uN]_r
                let mut x = un(r)?;
                if r >= 2 {
                    x = x.add(&prev[(r - 2) as usize].scale(&QRat::q_pow(-1)));
                }
                let x = x.scale(&q.inv().expect("q is invertible"));
                prev.push(x.clone());
                out.insert(GenId::sb(i, j, r as u32), x);
            }
        }
    }
    Ok(out)
}

/// The `s̄_ij^{(r)}` implied by the `s_ij^{(r)}` of a `yqsp` module.
pub fn sbar_from_s(m: &ModuleRep) -> Result<BTreeMap<GenId, Mat>, RepError> {
    require(m, &[AlgebraId::Yqsp], "sbar_from_s")?;
    sbar_coefficients(m.presentation().n(), m.cap(), m.dim(), &mut |i, j, r| m.action(GenId::s(i, j, r)))
}

fn yqsp_module(
    nn: usize,
    cap: u32,
    dim: usize,
    highest: Option<usize>,
    s: &mut dyn FnMut(usize, usize, u32) -> Result<Mat, RepError>,
) -> Result<ModuleRep, RepError> {
    let p = Presentation::new(AlgebraId::Yqsp, nn)?;
    check_zero_letters(&p, cap, &mut |g| s(g.row(), g.col(), g.r))?;
    let mut actions = sbar_coefficients(nn, cap, dim, s)?;
    for g in p.raw_letters(cap).letters {
        actions.insert(g, s(g.row(), g.col(), g.r)?);
    }
    ModuleRep::new(p, dim, cap, actions, highest)
}

/// Extends a `U'_q(sp_2n)`-module along `S(u) ↦ S + q u⁻¹ S̄`, where the
/// finite `S̄` has entries `s̄_ij = -q^{-δ_ij-1} s_ji + (1 - q^{-2}) δ_{i<j} s_ij`.
pub fn twisted_eval(v: &ModuleRep, cap: u32) -> Result<ModuleRep, RepError> {
    require(v, &[AlgebraId::Uqsp], "twisted_eval")?;
    let nn = v.presentation().n();
    let qq = QRat::q_minus_qinv();
    yqsp_module(nn, cap, v.dim(), v.highest_index(), &mut |i, j, r| match r {
        0 => v.action(GenId::s(i, j, 0)),
        1 => {
            let d = (i == j) as i32;
            let mut x = v.action(GenId::s(j, i, 0))?.scale(&-QRat::q_pow(-d));
            if i < j {
                x = x.add(&v.action(GenId::s(i, j, 0))?.scale(&qq));
            }
            Ok(x)
        }
        _ => Ok(Mat::zeros(v.dim(), v.dim())),
    })
}

/// Composes a `yqsp` module with the automorphism `s_ij(u) ↦ g(u) s_ij(u)`.
pub fn twist_by_series(m: &ModuleRep, g: &USeries) -> Result<ModuleRep, RepError> {
    require(m, &[AlgebraId::Yqsp], "twist_by_series")?;
    if g.dir() != Dir::Neg || g.coeff(0).is_zero() || g.cap() < m.cap() as usize {
        return Err(RepError::Invalid(
            "twisting series must run over u^-1 with invertible constant term and reach the cap".into(),
        ));
    }
    yqsp_module(m.presentation().n(), m.cap(), m.dim(), m.highest_index(), &mut |i, j, r| {
        let mut acc = Mat::zeros(m.dim(), m.dim());
        for k in 0..=r {
            if !g.coeff(k as usize).is_zero() {
                acc = acc.add(&m.action(GenId::s(i, j, r - k))?.scale(g.coeff(k as usize)));
            }
        }
        Ok(acc)
    })
}

/// Dual module: the transposed action composed with the anti-automorphism
/// `t_ij(u) ↦ t̄_{N+1-i,N+1-j}(u⁻¹)`, `t̄_ij(u) ↦ t_{N+1-i,N+1-j}(u⁻¹)` in
/// type `gl`, and `s_ij(u) ↦ s_{N+1-j,N+1-i}(u)` in the symplectic cases.
pub fn dual(m: &ModuleRep) -> Result<ModuleRep, RepError> {
    let p = m.presentation();
    let nn = p.n();
    let id = p.id();
    if id == AlgebraId::Yqsp {
        return yqsp_module(nn, m.cap(), m.dim(), None, &mut |i, j, r| {
            Ok(m.action(GenId::s(nn + 1 - j, nn + 1 - i, r))?.transpose())
        });
    }
    if !id.is_gl_type() && id != AlgebraId::Uqsp {
        return Err(RepError::Invalid(format!("no dual construction for {}", p)));
    }
    let mut actions = BTreeMap::new();
    for g in stored_letters(p, m.cap()) {
        let h = match g.fam {
            Fam::T => GenId::tb(nn + 1 - g.row(), nn + 1 - g.col(), g.r),
            Fam::TBar => GenId::t(nn + 1 - g.row(), nn + 1 - g.col(), g.r),
            _ => GenId::s(nn + 1 - g.col(), nn + 1 - g.row(), g.r),
        };
        actions.insert(g, m.action(h)?.transpose());
    }
    ModuleRep::new(p.clone(), m.dim(), m.cap(), actions, None)
}
