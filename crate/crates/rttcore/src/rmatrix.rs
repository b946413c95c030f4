//! Constant and trigonometric R-matrices on `C^N ⊗ C^N`.
//!
//! The basis vector `e_i ⊗ e_j` (1-based `i`, `j`) has index `(i-1)*N + (j-1)`.

use exactmath::{QRat, UVPoly};
use qlinalg::{place_on_legs, Mat, MatUV};

fn idx(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// Adds `c * E_ij ⊗ E_kl` (1-based).
fn put(m: &mut Mat, n: usize, (i, j): (usize, usize), (k, l): (usize, usize), c: &QRat) {
    m.add_to(idx(n, i, k), idx(n, j, l), c);
}

fn put_uv(m: &mut MatUV, n: usize, (i, j): (usize, usize), (k, l): (usize, usize), c: &UVPoly) {
    m.add_to(idx(n, i, k), idx(n, j, l), c);
}

/// `R = q Σ E_ii⊗E_ii + Σ_{i≠j} E_ii⊗E_jj + (q-q^-1) Σ_{i<j} E_ij⊗E_ji`.
pub fn r_const(n: usize) -> Mat {
    let mut m = Mat::zeros(n * n, n * n);
    let d = QRat::q_minus_qinv();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                put(&mut m, n, (i, i), (i, i), &QRat::q());
            } else {
                put(&mut m, n, (i, i), (j, j), &QRat::one());
            }
            if i < j {
                put(&mut m, n, (i, j), (j, i), &d);
            }
        }
    }
    m
}

/// `R^{t_1}` written out directly: the off-diagonal part is `(q-q^-1) Σ_{i<j} E_ji⊗E_ji`.
pub fn r_const_t1(n: usize) -> Mat {
    let mut m = Mat::zeros(n * n, n * n);
    let d = QRat::q_minus_qinv();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                put(&mut m, n, (i, i), (i, i), &QRat::q());
            } else {
                put(&mut m, n, (i, i), (j, j), &QRat::one());
            }
            if i < j {
                put(&mut m, n, (j, i), (j, i), &d);
            }
        }
    }
    m
}

/// Transpose in the first tensor leg of an `N^2 x N^2` matrix.
pub fn partial_transpose_1(m: &Mat, n: usize) -> Mat {
    Mat::from_entries(
        m.nrows(),
        m.ncols(),
        m.entries().map(|(r, c, x)| {
            let (i, k) = (r / n, r % n);
            let (j, l) = (c / n, c % n);
            (j * n + k, i * n + l, x.clone())
        }),
    )
}

/// Transpose in the first tensor leg of a `MatUV`.
pub fn partial_transpose_1_uv(m: &MatUV, n: usize) -> MatUV {
    let mut out = MatUV::zeros(m.nrows(), m.ncols());
    for (&(r, c), x) in m.entries() {
        let (i, k) = (r / n, r % n);
        let (j, l) = (c / n, c % n);
        out.add_to(j * n + k, i * n + l, x);
    }
    out
}

/// Trigonometric `R(u,v)`.
pub fn r_trig(n: usize) -> MatUV {
    let mut m = MatUV::zeros(n * n, n * n);
    let d = QRat::one() / QRat::q() - QRat::q();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                put_uv(&mut m, n, (i, i), (i, i), &UVPoly::linear(QRat::q_pow(-1), -QRat::q()));
            } else {
                put_uv(&mut m, n, (i, i), (j, j), &UVPoly::linear(QRat::one(), QRat::from_int(-1)));
            }
            if i > j {
                put_uv(&mut m, n, (i, j), (j, i), &UVPoly::monomial(d.clone(), 1, 0));
            } else if i < j {
                put_uv(&mut m, n, (i, j), (j, i), &UVPoly::monomial(d.clone(), 0, 1));
            }
        }
    }
    m
}

/// `R^{t_1}(u,v)`, the first-leg transpose of [`r_trig`].
pub fn r_trig_t1(n: usize) -> MatUV {
    let mut m = MatUV::zeros(n * n, n * n);
    let d = QRat::one() / QRat::q() - QRat::q();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                put_uv(&mut m, n, (i, i), (i, i), &UVPoly::linear(QRat::q_pow(-1), -QRat::q()));
            } else {
                put_uv(&mut m, n, (i, i), (j, j), &UVPoly::linear(QRat::one(), QRat::from_int(-1)));
            }
            if i > j {
                put_uv(&mut m, n, (j, i), (j, i), &UVPoly::monomial(d.clone(), 1, 0));
            } else if i < j {
                put_uv(&mut m, n, (j, i), (j, i), &UVPoly::monomial(d.clone(), 0, 1));
            }
        }
    }
    m
}

/// `G = q Σ E_{2k-1,2k} - Σ E_{2k,2k-1}` of size `2n`.
pub fn g_matrix(n: usize) -> Mat {
    let mut g = Mat::zeros(2 * n, 2 * n);
    for k in 1..=n {
        g.set(2 * k - 2, 2 * k - 1, QRat::q());
        g.set(2 * k - 1, 2 * k - 2, QRat::from_int(-1));
    }
    g
}

/// Permutation operator `P = Σ E_ij ⊗ E_ji`.
pub fn perm_matrix(n: usize) -> Mat {
    let mut p = Mat::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            put(&mut p, n, (i, j), (j, i), &QRat::one());
        }
    }
    p
}

/// `R12 R13 R23 - R23 R13 R12` for an arbitrary two-leg operator.
pub fn ybe_residual(r: &Mat, n: usize) -> Mat {
    let leg = |a, b| place_on_legs(r, (a, b), 3, n).expect("square two-leg operator");
    let (r12, r13, r23) = (leg(1, 2), leg(1, 3), leg(2, 3));
    r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12))
}

pub fn ybe_check(n: usize) -> Mat {
    ybe_residual(&r_const(n), n)
}

/// `R(u,v) R_{q^-1}(u,v) - (qu - q^-1 v)(q^-1 u - qv)`.
pub fn trig_inverse_check(n: usize) -> MatUV {
    let r = r_trig(n);
    let rinv = r.map(|x| x.invert_q());
    let f = &UVPoly::linear(QRat::q(), -QRat::q_pow(-1)) * &UVPoly::linear(QRat::q_pow(-1), -QRat::q());
    r.mul(&rinv).sub(&MatUV::from_mat(&Mat::identity(n * n), &f))
}

/// `R(u,v) + P R_{q^-1}(v,u) P`.
pub fn trig_swap_check(n: usize) -> MatUV {
    let p = MatUV::from_mat(&perm_matrix(n), &UVPoly::constant(QRat::one()));
    let swapped = r_trig(n).map(|x| x.invert_q().swap_uv());
    r_trig(n).add(&p.mul(&swapped).mul(&p))
}

/// `ς(i) = i` for odd `i`, `-i+1` for even `i`.
pub fn varsigma(i: usize) -> i64 {
    let i = i as i64;
    if i % 2 == 1 {
        i
    } else {
        1 - i
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QRat {
        s.parse().unwrap()
    }

    fn at_one(x: &QRat) -> QRat {
        QRat::from_rational(x.eval_at(&exactmath::BigRational::from_integer(1.into())).unwrap())
    }

    #[test]
    fn r_const_two() {
        let r = r_const(2);
        assert_eq!(r.get(0, 0), QRat::q());
        assert!(r.get(1, 1).is_one());
        assert!(r.get(2, 2).is_one());
        assert_eq!(r.get(3, 3), QRat::q());
        // E_12 ⊗ E_21 maps e_1⊗e_2 (index 1) from e_2⊗e_1 (index 2)
        assert_eq!(r.get(1, 2), q("q-1/q"));
        assert_eq!(r.nnz(), 5);
        assert_eq!(r.map_entries(at_one), Mat::identity(4));
        let r3 = r_const(3);
        let diag: Vec<QRat> = (0..9).map(|i| r3.get(i, i)).collect();
        assert_eq!(diag.iter().filter(|x| **x == QRat::q()).count(), 3);
        assert_eq!(diag.iter().filter(|x| x.is_one()).count(), 6);
    }

    #[test]
    fn partial_transpose_matches_formula() {
        for n in 2..=4 {
            assert_eq!(partial_transpose_1(&r_const(n), n), r_const_t1(n));
            assert_eq!(partial_transpose_1_uv(&r_trig(n), n), r_trig_t1(n));
        }
        let rt = r_const_t1(2);
        // E_21 ⊗ E_21: row e_2⊗e_2, column e_1⊗e_1
        assert_eq!(rt.get(3, 0), q("q-1/q"));
        assert_eq!(rt.map_entries(at_one), Mat::identity(4));
    }

    #[test]
    fn trig_entries() {
        let r = r_trig(2);
        assert_eq!(r.get(0, 0), UVPoly::linear(q("1/q"), q("-q")));
        // E_21 ⊗ E_12 carries the u term
        assert_eq!(r.get(2, 1).coeff(1, 0), q("1/q-q"));
        let at1 = r.eval(&QRat::one(), &QRat::one()).map_entries(at_one);
        assert!(qlinalg::rank(&at1) < 4);
    }

    #[test]
    fn g_matrix_square() {
        let g = g_matrix(1);
        assert_eq!(g.to_dense(), vec![vec![QRat::zero(), QRat::q()], vec![QRat::from_int(-1), QRat::zero()]]);
        for n in 1..=3 {
            let g = g_matrix(n);
            assert_eq!(g.mul(&g), Mat::identity(2 * n).scale(&-QRat::q()));
        }
        let g2 = g_matrix(2);
        assert_eq!(g2.get(2, 3), QRat::q());
        assert_eq!(g2.get(0, 3), QRat::zero());
    }

    #[test]
    fn yang_baxter() {
        for n in 2..=4 {
            assert!(ybe_check(n).is_zero(), "YBE fails for N={}", n);
        }
        let mut bad = r_const(2);
        bad.add_to(idx(2, 1, 2), idx(2, 1, 2), &QRat::one());
        assert!(!ybe_residual(&bad, 2).is_zero());
    }

    #[test]
    fn trig_identities() {
        for n in 2..=3 {
            assert!(trig_inverse_check(n).is_zero());
            assert!(trig_swap_check(n).is_zero());
        }
    }

    #[test]
    fn varsigma_values() {
        assert_eq!(varsigma(1), 1);
        assert_eq!(varsigma(2), -1);
        assert_eq!(varsigma(4), -3);
        assert_eq!(varsigma(3), 3);
    }
}
