//! The maps `κ_l = π^{⊗l} ∘ Δ^{(l-1)}` into tensor powers of the finite
//! algebra and the linear independence test built on them.

use std::collections::{BTreeMap, HashMap};

use exactmath::{BigRational, QRat};
use num_traits::{One, Zero};
use qlinalg::{rref, SparseVec};

use crate::gens::{Fam, GenId, NCPoly, Word};
use crate::presentation::{AlgebraId, Presentation};
use crate::straighten::straighten;
use crate::RttError;

/// Linear combination of `l`-fold tensors of words.
pub type TensorPoly = BTreeMap<Vec<Word>, QRat>;

const MONOMIAL_LIMIT: usize = 4000;

fn tensor_add(acc: &mut TensorPoly, k: Vec<Word>, c: QRat) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(k).or_default();
    *e += c;
    if e.is_zero() {
        acc.retain(|_, v| !v.is_zero());
    }
}

fn tensor_mul(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::new();
    for (x, c) in a {
        for (y, d) in b {
            let k = x.iter().zip(y).map(|(u, v)| u.concat(v)).collect();
            tensor_add(&mut out, k, c * d);
        }
    }
    out
}

/// Letter `t_ab` or `t̄_ab` of the non-extended finite algebra, `None` if it vanishes.
fn finite_letter(bar: bool, a: usize, b: usize) -> Option<(GenId, i32)> {
    match (bar, a.cmp(&b)) {
        (false, std::cmp::Ordering::Less) | (true, std::cmp::Ordering::Greater) => None,
        (true, std::cmp::Ordering::Equal) => Some((GenId::t(a, a, 0), -1)),
        (false, _) => Some((GenId::t(a, b, 0), 1)),
        (true, _) => Some((GenId::tb(a, b, 0), 1)),
    }
}

/// Image of an affine generator under `κ_l` in `U_q(gl_N)^{⊗l}`.
pub fn kappa_l(g: GenId, l: usize, n: usize) -> Result<TensorPoly, RttError> {
    let aff = Presentation::new(AlgebraId::Uqaff, n)?;
    aff.gen(g.fam, g.row(), g.col(), g.r)?;
    if l == 0 {
        return Err(RttError::Generator("κ_l needs l >= 1".into()));
    }
    let mut out = TensorPoly::new();
    let r = g.r as usize;
    if r > l {
        return Ok(out);
    }
    let base_bar = g.fam == Fam::TBar;
    // positions taking the opposite family: subsets of size r
    for mask in 0u32..(1 << l) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let mut paths: Vec<(usize, Vec<Word>)> = vec![(g.row(), Vec::new())];
        for k in 0..l {
            let bar = base_bar ^ (mask >> k & 1 == 1);
            let mut next = Vec::new();
            for (a, ws) in &paths {
                let targets: Vec<usize> = if k + 1 == l { vec![g.col()] } else { (1..=n).collect() };
                for b in targets {
                    if let Some((h, p)) = finite_letter(bar, *a, b) {
                        let mut w = ws.clone();
                        w.push(Word::letter(h, p));
                        next.push((b, w));
                    }
                }
            }
            paths = next;
        }
        for (_, ws) in paths {
            tensor_add(&mut out, ws, QRat::one());
        }
    }
    Ok(out)
}

/// Ordered monomials of `uqaff:n` with levels at most `m` and length at most `cap`.
fn ordered_monomials(p: &Presentation, m: u32, cap: usize) -> Vec<Word> {
    fn rec(
        p: &Presentation,
        letters: &[GenId],
        k: usize,
        left: usize,
        cur: &mut Vec<(GenId, i32)>,
        out: &mut Vec<Word>,
    ) {
        if k == letters.len() {
            out.push(Word::from_factors(cur.iter().copied()));
            return;
        }
        let g = letters[k];
        let lo = if p.is_invertible(g) { -(left as i32) } else { 0 };
        for e in lo..=left as i32 {
            cur.push((g, e));
            rec(p, letters, k + 1, left - e.unsigned_abs() as usize, cur, out);
            cur.pop();
        }
    }
    let letters = p.letters(m);
    let mut out = Vec::new();
    rec(p, &letters, 0, cap, &mut Vec::new(), &mut out);
    out
}

/// Whether the `κ_{2m+1}` images of the ordered monomials of `uqaff:n` with
/// levels at most `m` and length at most `word_cap` are linearly independent
/// after straightening every tensor factor.
pub fn kappa_independence_check(n: usize, m: u32, word_cap: usize) -> Result<bool, RttError> {
    independence_under(n, m, word_cap, 2 * m as usize + 1)
}

fn independence_under(n: usize, m: u32, word_cap: usize, l: usize) -> Result<bool, RttError> {
    let aff = Presentation::new(AlgebraId::Uqaff, n)?;
    let fin = Presentation::new(AlgebraId::Uqgl, n)?;
    let monos = ordered_monomials(&aff, m, word_cap);
    if monos.len() > MONOMIAL_LIMIT {
        return Err(RttError::Resource(format!("{} monomials exceed the limit {}", monos.len(), MONOMIAL_LIMIT)));
    }
    let mut images: HashMap<GenId, TensorPoly> = HashMap::new();
    let mut normal: HashMap<Word, NCPoly> = HashMap::new();
    let mut columns: HashMap<Vec<Word>, usize> = HashMap::new();
    let mut rows: Vec<SparseVec> = Vec::new();
    for w in &monos {
        let mut acc: TensorPoly = [(vec![Word::empty(); l], QRat::one())].into_iter().collect();
        for &(g, e) in w.factors() {
            let img = match images.get(&g) {
                Some(x) => x.clone(),
                None => {
                    let x = kappa_l(g, l, n)?;
                    images.insert(g, x.clone());
                    x
                }
            };
            let img = if e < 0 {
                // κ of an inverse Cartan letter: componentwise inverse of the single tensor term
                let (k, c) = img.iter().next().ok_or_else(|| RttError::Internal("zero Cartan image".into()))?;
                let inv: Vec<Word> =
                    k.iter().map(|x| Word::from_factors(x.factors().iter().map(|&(h, p)| (h, -p)))).collect();
                let c = c.inv().map_err(|_| RttError::Internal("zero Cartan image".into()))?;
                [(inv, c)].into_iter().collect()
            } else {
                img
            };
            for _ in 0..e.unsigned_abs() {
                acc = tensor_mul(&acc, &img);
            }
        }
        let mut row = TensorPoly::new();
        for (k, c) in acc {
            let mut parts: TensorPoly = [(Vec::new(), c)].into_iter().collect();
            for x in k {
                let nf = match normal.get(&x) {
                    Some(v) => v.clone(),
                    None => {
                        let v = straighten(&fin, &NCPoly::word(x.clone()), 0)?;
                        normal.insert(x, v.clone());
                        v
                    }
                };
                let mut next = TensorPoly::new();
                for (ws, a) in &parts {
                    for (v, b) in nf.terms() {
                        let mut ws2 = ws.clone();
                        ws2.push(v.clone());
                        tensor_add(&mut next, ws2, a * b);
                    }
                }
                parts = next;
            }
            for (ws, a) in parts {
                tensor_add(&mut row, ws, a);
            }
        }
        let sv: SparseVec = row
            .into_iter()
            .map(|(k, c)| {
                let len = columns.len();
                (*columns.entry(k).or_insert(len), c)
            })
            .collect();
        rows.push(sv);
    }
    let rank = rref(rows, columns.len()).rank();
    Ok(rank == monos.len())
}

/// Determinant of the matrix `(e_r(x_1,…,x̂_k,…,x_l))_{r,k}`.
pub fn elem_sym_det(points: &[BigRational]) -> BigRational {
    let l = points.len();
    let mut a: Vec<Vec<BigRational>> = vec![Vec::with_capacity(l); l];
    for k in 0..l {
        // elementary symmetric polynomials of the points without x_k
        let mut e = vec![BigRational::one()];
        for (i, x) in points.iter().enumerate() {
            if i == k {
                continue;
            }
            e.push(BigRational::zero());
            for r in (1..e.len()).rev() {
                let t = &e[r - 1] * x;
                e[r] += t;
            }
        }
        for (r, row) in a.iter_mut().enumerate() {
            row.push(e.get(r).cloned().unwrap_or_else(BigRational::zero));
        }
    }
    det(a)
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde_product(points: &[BigRational]) -> BigRational {
    let mut p = BigRational::one();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            p *= &points[i] - &points[j];
        }
    }
    p
}

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if piv != c {
            a.swap(piv, c);
            d = -d;
        }
        let p = a[c][c].clone();
        d *= &p;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &p;
            let (head, tail) = a.split_at_mut(r);
            for (x, y) in tail[0][c..n].iter_mut().zip(&head[c][c..n]) {
                *x -= &f * y;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn single(p: &TensorPoly) -> Vec<String> {
        p.iter()
            .map(|(k, c)| format!("{}:{}", c, k.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("|")))
            .collect()
    }

    #[test]
    fn kappa_one_is_evaluation() {
        assert_eq!(single(&kappa_l(GenId::t(2, 1, 0), 1, 2).unwrap()), vec!["1:t[2,1;0]"]);
        assert_eq!(single(&kappa_l(GenId::t(1, 2, 1), 1, 2).unwrap()), vec!["1:tb[1,2;0]"]);
        assert_eq!(single(&kappa_l(GenId::t(1, 1, 1), 1, 2).unwrap()), vec!["1:t[1,1;0]^-1"]);
        assert!(kappa_l(GenId::t(1, 1, 2), 1, 2).unwrap().is_empty());
        assert!(kappa_l(GenId::t(1, 2, 0), 1, 2).is_err());
    }

    #[test]
    fn kappa_coproduct_shape() {
        // κ_2(t_21^{(0)}) = t_21 ⊗ t_11 + t_22 ⊗ t_21
        let x = kappa_l(GenId::t(2, 1, 0), 2, 2).unwrap();
        assert_eq!(x.len(), 2);
        // κ_2(t_11^{(1)}): one barred position out of two, lower triangular paths
        let y = kappa_l(GenId::t(1, 1, 1), 2, 2).unwrap();
        assert_eq!(single(&y), vec!["1:t[1,1;0]^-1|t[1,1;0]", "1:t[1,1;0]|t[1,1;0]^-1", "1:tb[1,2;0]|t[2,1;0]"]);
    }

    #[test]
    fn independence_small() {
        assert!(kappa_independence_check(2, 0, 0).unwrap());
        assert!(kappa_independence_check(2, 0, 2).unwrap());
        assert!(kappa_independence_check(2, 1, 1).unwrap());
        // κ_1 identifies t_ij^{(1)} with t̄_ij^{(0)}
        assert!(!independence_under(2, 1, 1, 1).unwrap());
    }

    #[test]
    fn elem_sym_examples() {
        assert_eq!(elem_sym_det(&[rat(2), rat(3)]), rat(-1));
        assert_eq!(elem_sym_det(&[rat(5), rat(5)]), rat(0));
        assert_eq!(elem_sym_det(&[rat(1), rat(2), rat(4)]), rat(-6));
        assert_eq!(vandermonde_product(&[rat(1), rat(2), rat(4)]), rat(-6));
    }
}
