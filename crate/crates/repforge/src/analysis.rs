//! Highest weights, singular vectors, cyclic spans and irreducibility.

use exactmath::{Dir, QRat, USeries};
use qlinalg::{envelope_dimension, envelope_dimension_specialized, kernel, Mat, VecSpace};
use rttcore::{varsigma, AlgebraId, Fam, GenId};

use crate::module::ModuleRep;
use crate::RepError;

/// Highest weight read off a highest vector.
///
/// For the `gl` algebras `main` holds `ν_i(u)` (eigenvalues of `t_ii(u)`,
/// series in `u⁻¹`) and `bar` holds `ν̄_i(u)` (eigenvalues of `t̄_ii(u)`,
/// series in `u`). For `uqsp` and `yqsp`, `main` holds `μ_i` from
/// `s_{2i,2i-1}`, `bar` holds `μ̄_i(u)` from `s̄_{2i,2i-1}(u)` (`yqsp` only)
/// and `primed` holds `μ'_i` from `s_{2i-1,2i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeightData {
    pub main: Vec<USeries>,
    pub bar: Vec<USeries>,
    pub primed: Vec<USeries>,
}

fn is_raising(id: AlgebraId, g: GenId) -> bool {
    if id.is_gl_type() {
        g.i < g.j
    } else {
        varsigma(g.row()) + varsigma(g.col()) > 0
    }
}

/// Stored generators that annihilate a highest vector.
pub fn raising_letters(m: &ModuleRep) -> Vec<GenId> {
    let id = m.presentation().id();
    m.actions().keys().copied().filter(|&g| is_raising(id, g)).collect()
}

fn eigenvalue(m: &Mat, v: &[QRat], g: GenId) -> Result<QRat, RepError> {
    let w = m.apply(v);
    let p = v.iter().position(|x| !x.is_zero()).ok_or_else(|| RepError::NotHighest("zero vector".into()))?;
    let lam = &w[p] / &v[p];
    if w.iter().zip(v).any(|(a, b)| *a != &lam * b) {
        return Err(RepError::NotHighest(format!("not an eigenvector of {}", g)));
    }
    Ok(lam)
}

/// Eigenvalue series of `x_ij^{(r)}`, `r <= cap`.
fn eigen_series(m: &ModuleRep, v: &[QRat], fam: Fam, i: usize, j: usize, dir: Dir) -> Result<USeries, RepError> {
    let coeffs = (0..=m.cap())
        .map(|r| {
            let g = GenId::new(fam, i, j, r);
            eigenvalue(&m.action(g)?, v, g)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(USeries::new(dir, coeffs))
}

/// Checks that `v` is annihilated by the raising generators and returns its
/// eigenvalues under the diagonal generator series.
pub fn highest_weight_of(m: &ModuleRep, v: &[QRat]) -> Result<HighestWeightData, RepError> {
    if v.len() != m.dim() {
        return Err(RepError::Invalid(format!("vector of length {} in a module of dimension {}", v.len(), m.dim())));
    }
    if v.iter().all(|x| x.is_zero()) {
        return Err(RepError::NotHighest("zero vector".into()));
    }
    for g in raising_letters(m) {
        if m.actions()[&g].apply(v).iter().any(|x| !x.is_zero()) {
            return Err(RepError::NotHighest(format!("{} does not annihilate it", g)));
        }
    }
    let p = m.presentation();
    let mut hw = HighestWeightData { main: Vec::new(), bar: Vec::new(), primed: Vec::new() };
    if p.id().is_gl_type() {
        for i in 1..=p.n() {
            hw.main.push(eigen_series(m, v, Fam::T, i, i, Dir::Neg)?);
            hw.bar.push(eigen_series(m, v, Fam::TBar, i, i, Dir::Pos)?);
        }
    } else if p.id().is_symplectic() {
        for i in 1..=p.n() / 2 {
            hw.main.push(eigen_series(m, v, Fam::S, 2 * i, 2 * i - 1, Dir::Neg)?);
            hw.primed.push(eigen_series(m, v, Fam::S, 2 * i - 1, 2 * i, Dir::Neg)?);
            if p.id() == AlgebraId::Yqsp {
                hw.bar.push(eigen_series(m, v, Fam::SBar, 2 * i, 2 * i - 1, Dir::Pos)?);
            }
        }
    } else {
        return Err(RepError::Invalid(format!("no highest weight theory for {}", p)));
    }
    Ok(hw)
}

/// `μ'(u) = ((q²-1)μ(u) + (1-u²q²)μ̄(u⁻¹)) / (q(u²-1))` as a series in `u⁻¹`.
pub fn mu_prime_from(mu: &USeries, mubar: &USeries) -> USeries {
    let cap = mu.cap().min(mubar.cap());
    let q2 = QRat::q_pow(2);
    let at = |s: &USeries, k: i64| {
        if k < 0 {
            QRat::zero()
        } else {
            s.coeff(k as usize).clone()
        }
    };
    let mut out: Vec<QRat> = Vec::with_capacity(cap + 1);
    let qinv = QRat::q_pow(-1);
    for k in 0..=cap as i64 {
        // with x = u⁻¹: q(1-x²)μ'(x) = (q²-1)x²μ(x) + (x²-q²)μ̄(x)
        let num = &(&(&(&q2 - &QRat::one()) * &at(mu, k - 2)) + &at(mubar, k - 2)) - &(&q2 * &at(mubar, k));
        let mut c = &num * &qinv;
        if k >= 2 {
            c = &c + &out[(k - 2) as usize];
        }
        out.push(c);
    }
    USeries::new(Dir::Neg, out)
}

/// Joint kernel of the raising generators.
pub fn singular_vectors(m: &ModuleRep) -> VecSpace {
    let raising = raising_letters(m);
    let n = m.dim();
    let mut stacked = Mat::zeros(raising.len() * n, n);
    for (k, g) in raising.iter().enumerate() {
        for (i, j, x) in m.actions()[g].entries() {
            stacked.set(k * n + i, j, x.clone());
        }
    }
    kernel(&stacked)
}

/// Smallest subspace containing `v` and stable under every generator.
pub fn cyclic_span(m: &ModuleRep, v: &[QRat]) -> VecSpace {
    let mut span = VecSpace::new(m.dim());
    if !span.insert(v) {
        return span;
    }
    let mats: Vec<&Mat> = m.actions().values().collect();
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        for a in &mats {
            if span.dimension() == m.dim() {
                return span;
            }
            let x = a.apply(&w);
            if span.insert(&x) {
                queue.push(x);
            }
        }
    }
    span
}

/// A proper nonzero invariant subspace spanned from a singular vector, if
/// one of the singular basis vectors generates one.
pub fn invariant_subspace(m: &ModuleRep) -> Option<VecSpace> {
    singular_vectors(m).basis().iter().map(|v| cyclic_span(m, v)).find(|s| s.dimension() < m.dim())
}

const SPECIALIZATION_POINTS: [u64; 2] = [1_000_003, 982_451_653];

/// Irreducibility over Q(q): the generator matrices span the full matrix
/// algebra. A full specialized envelope or a proper invariant subspace
/// settles the question before the exact envelope is computed.
pub fn is_irreducible(m: &ModuleRep) -> bool {
    let n = m.dim();
    if n == 1 {
        return true;
    }
    let mats: Vec<Mat> = m.actions().values().cloned().collect();
    if SPECIALIZATION_POINTS.iter().any(|&q0| envelope_dimension_specialized(&mats, n, q0) == Some(n * n)) {
        return true;
    }
    if invariant_subspace(m).is_some() {
        return false;
    }
    envelope_dimension(&mats, n) == n * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{gl2_finite_module, DEFAULT_DEPTH};

    fn qp(s: i64, e: i32) -> QRat {
        QRat::signed_q_pow(s, e)
    }

    #[test]
    fn finite_module_structure() {
        let m = gl2_finite_module(&qp(1, 2), &QRat::one(), DEFAULT_DEPTH).unwrap();
        let s = singular_vectors(&m);
        assert_eq!(s.dimension(), 1);
        let mut bottom = vec![QRat::zero(); 3];
        bottom[2] = QRat::one();
        assert_eq!(cyclic_span(&m, &bottom).dimension(), 3);
        assert!(invariant_subspace(&m).is_none());
        assert!(is_irreducible(&m));
    }

    #[test]
    fn mu_prime_of_constant_weights() {
        // μ = 1, μ̄ = 1 gives μ' = -q: the one-dimensional module with s_12 = -q
        let one = |d| USeries::constant(d, QRat::one(), 4);
        let mp = mu_prime_from(&one(Dir::Neg), &one(Dir::Pos));
        assert_eq!(mp, USeries::constant(Dir::Neg, qp(-1, 1), 4));
    }
}
