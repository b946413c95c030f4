use exactmath::{Dir, QRat, USeries};
use qlinalg::Mat;
use repforge::*;
use rttcore::GenId;

fn qp(s: i64, e: i32) -> QRat {
    QRat::signed_q_pow(s, e)
}

fn unit(n: usize, k: usize) -> Vec<QRat> {
    let mut v = vec![QRat::zero(); n];
    v[k] = QRat::one();
    v
}

fn eval_l(alpha: QRat, beta: QRat, cap: u32) -> ModuleRep {
    eval_affine(&gl2_finite_module(&alpha, &beta, DEFAULT_DEPTH).unwrap(), cap).unwrap()
}

fn top(m: &ModuleRep) -> Vec<QRat> {
    unit(m.dim(), m.highest_index().unwrap())
}

fn lin(c0: QRat, c1: QRat, dir: Dir, cap: usize) -> USeries {
    USeries::from_prefix(dir, &[c0, c1], cap)
}

#[test]
fn eval_highest_weight() {
    let (a, b) = (qp(1, 2), qp(1, 0));
    let m = eval_l(a.clone(), b.clone(), 4);
    assert_eq!(m.dim(), 3);
    let hw = highest_weight_of(&m, &top(&m)).unwrap();
    let ai = a.inv().unwrap();
    let bi = b.inv().unwrap();
    assert_eq!(hw.main[0], lin(a.clone(), ai.clone(), Dir::Neg, 4));
    assert_eq!(hw.main[1], lin(b.clone(), bi.clone(), Dir::Neg, 4));
    assert_eq!(hw.bar[0], lin(ai, a, Dir::Pos, 4));
    assert_eq!(hw.bar[1], lin(bi, b, Dir::Pos, 4));
}

#[test]
fn eval_satisfies_relations() {
    let m = eval_l(qp(1, 1), qp(1, 0), 6);
    let r = verify_relations(&m).unwrap();
    assert!(r.ok(), "{:?}", r.failures.first());
    assert!(r.checked > 100);
}

#[test]
fn corrupted_module_fails() {
    let m = eval_l(qp(1, 1), qp(1, 0), 2);
    let g = GenId::t(2, 1, 0);
    let mut bad = m.action(g).unwrap();
    bad.add_to(1, 0, &QRat::one());
    let r = verify_relations(&m.with_action(g, bad).unwrap()).unwrap();
    assert!(!r.ok());
    assert!(r.failures.iter().all(|f| f.nnz > 0));
}

#[test]
fn tensor_multiplies_highest_weights() {
    let (a1, b1, a2, b2) = (qp(1, 1), qp(1, 0), qp(-1, 2), qp(1, 1));
    let m = tensor(&eval_l(a1.clone(), b1.clone(), 6), &eval_l(a2.clone(), b2.clone(), 6)).unwrap();
    assert_eq!(m.dim(), 4);
    let hw = highest_weight_of(&m, &top(&m)).unwrap();
    let f = |a: &QRat| lin(a.clone(), a.inv().unwrap(), Dir::Neg, 6);
    assert_eq!(hw.main[0], f(&a1).mul(&f(&a2)));
    assert_eq!(hw.main[1], f(&b1).mul(&f(&b2)));
    let r = verify_relations(&m).unwrap();
    assert!(r.ok(), "{:?}", r.failures.first());
}

#[test]
fn tensor_with_trivial_module() {
    let m = eval_l(qp(1, 2), qp(1, 0), 4);
    let triv = trivial_module(m.presentation(), 4).unwrap();
    assert_eq!(tensor(&m, &triv).unwrap().actions(), m.actions());
    assert_eq!(tensor(&triv, &m).unwrap().actions(), m.actions());
    assert_eq!(tensor(&m, &eval_l(qp(1, 1), qp(1, 0), 2)).unwrap_err(), RepError::CapMismatch(4, 2));
}

#[test]
fn irreducibility_examples() {
    let m = tensor(&eval_l(qp(1, 1), qp(1, 0), 6), &eval_l(qp(1, 1), qp(1, 0), 6)).unwrap();
    assert!(is_irreducible(&m));
    let r = tensor(&eval_l(qp(1, 2), qp(1, 0), 6), &eval_l(qp(1, 3), qp(1, 1), 6)).unwrap();
    assert_eq!(r.dim(), 9);
    assert!(!is_irreducible(&r));
    // in this order the top vector is cyclic and a second singular vector
    // generates the proper submodule; in the opposite order the top vector does
    assert!(singular_vectors(&r).dimension() >= 2);
    assert_eq!(cyclic_span(&r, &top(&r)).dimension(), 9);
    assert!(invariant_subspace(&r).is_some());
    let s = tensor(&eval_l(qp(1, 3), qp(1, 1), 6), &eval_l(qp(1, 2), qp(1, 0), 6)).unwrap();
    assert!(!is_irreducible(&s));
    assert_eq!(cyclic_span(&s, &top(&s)).dimension(), 8);
    assert!(is_irreducible(&eval_l(qp(1, 1), qp(1, 1), 6)));
}

#[test]
fn finite_module_singular_and_cyclic() {
    for m in 0..4 {
        let l = gl2_finite_module(&qp(1, m), &QRat::one(), DEFAULT_DEPTH).unwrap();
        assert_eq!(singular_vectors(&l).dimension(), 1);
        assert_eq!(cyclic_span(&l, &top(&l)).dimension(), l.dim());
        assert_eq!(cyclic_span(&l, &vec![QRat::zero(); l.dim()]).dimension(), 0);
        assert!(is_irreducible(&l));
        assert!(verify_relations(&l).unwrap().ok());
    }
}

#[test]
fn twisted_restriction_of_eval() {
    let (a, b) = (qp(1, 1), qp(1, 0));
    let m = twisted_restrict(&eval_l(a.clone(), b.clone(), 6)).unwrap();
    let hw = highest_weight_of(&m, &top(&m)).unwrap();
    // s_21(u)ζ = -(α⁻¹ + α u⁻¹)(β + β⁻¹ u⁻¹)ζ
    let x = lin(a.inv().unwrap(), a.clone(), Dir::Neg, 6);
    let y = lin(b.clone(), b.inv().unwrap(), Dir::Neg, 6);
    assert_eq!(hw.main[0], x.mul(&y).scale(&QRat::from_int(-1)));
    let r = verify_relations(&m).unwrap();
    assert!(r.ok(), "{:?}", r.failures.first());
}

#[test]
fn twisted_restriction_of_tensor() {
    let t = tensor(&eval_l(qp(1, 1), qp(1, 0), 6), &eval_l(qp(-1, 2), qp(1, 1), 6)).unwrap();
    let m = twisted_restrict(&t).unwrap();
    let r = verify_relations(&m).unwrap();
    assert!(r.ok(), "{:?}", r.failures.first());
}

#[test]
fn twisted_eval_example() {
    let v = uqsp2_module(&QRat::one(), &qp(-1, 3), DEFAULT_DEPTH).unwrap();
    assert!(verify_relations(&v).unwrap().ok());
    let m = twisted_eval(&v, 6).unwrap();
    let hw = highest_weight_of(&m, &top(&m)).unwrap();
    assert_eq!(hw.main[0], lin(QRat::one(), qp(1, 3), Dir::Neg, 6));
    assert_eq!(hw.bar[0].coeff(0), &qp(1, 2));
    assert_eq!(hw.primed[0], mu_prime_from(&hw.main[0], &hw.bar[0]));
    let r = verify_relations(&m).unwrap();
    assert!(r.ok(), "{:?}", r.failures.first());
    assert!(is_irreducible(&m));
}

#[test]
fn twist_keeps_relations_and_irreducibility() {
    let m = twisted_restrict(&eval_l(qp(1, 2), qp(1, 0), 4)).unwrap();
    let g = USeries::from_prefix(Dir::Neg, &[qp(1, 1), QRat::from_int(2), qp(-1, -1)], 4);
    let t = twist_by_series(&m, &g).unwrap();
    assert!(verify_relations(&t).unwrap().ok());
    assert_eq!(is_irreducible(&t), is_irreducible(&m));
}

#[test]
fn dual_of_irreducible() {
    let m = tensor(&eval_l(qp(1, 1), qp(1, 0), 4), &eval_l(qp(1, 2), qp(-1, 0), 4)).unwrap();
    let d = dual(&m).unwrap();
    assert!(verify_relations(&d).unwrap().ok());
    assert_eq!(is_irreducible(&d), is_irreducible(&m));
    let v = uqsp2_module(&qp(1, 1), &qp(-1, 6), DEFAULT_DEPTH).unwrap();
    assert!(verify_relations(&dual(&v).unwrap()).unwrap().ok());
}

#[test]
fn not_highest_is_rejected() {
    let m = eval_l(qp(1, 1), qp(1, 0), 2);
    let e = highest_weight_of(&m, &unit(2, 1)).unwrap_err();
    assert!(e.to_string().contains("not a highest vector"));
}

#[test]
fn json_round_trip_keeps_verification() {
    let m = twisted_restrict(&eval_l(qp(1, 1), qp(1, 0), 2)).unwrap();
    let back = ModuleRep::from_json(&m.to_json()).unwrap();
    assert_eq!(back.actions(), m.actions());
    assert!(verify_relations(&back).unwrap().ok());
    let _ = Mat::identity(1);
}
