use std::time::Instant;

use exactmath::{BigRational, QRat};
use proptest::prelude::*;
use rttcore::{
    confluence_fuzz, elem_sym_det, kappa_independence_check, relation_residuals, straighten, vandermonde_product,
    NCPoly, Presentation, Word,
};

fn pres(s: &str) -> Presentation {
    s.parse().unwrap()
}

#[test]
fn confluence_at_scale() {
    for s in ["uqgl:2", "uqgl:3", "uqo:3", "uqsp:2", "yqsp:2", "yqo:2", "uqaff:2", "uqgl:2:ext"] {
        let t = Instant::now();
        let r = confluence_fuzz(&pres(s), 4, 200, 11, 2).unwrap();
        assert!(r.ok(), "{}: {:?}", s, r.mismatches.first());
        eprintln!("{} {:?}", s, t.elapsed());
    }
}

#[test]
fn affine_representation_order() {
    let r = confluence_fuzz(&pres("uqaff:2:rep"), 3, 100, 3, 1).unwrap();
    assert!(r.ok());
}

#[test]
fn relation_residuals_vanish_at_level_two() {
    for s in ["uqaff:2", "yqo:3", "yqsp:2", "uqsp:4", "uqo:4"] {
        let p = pres(s);
        let bad = relation_residuals(&p, 2).unwrap();
        assert!(bad.is_empty(), "{}: {:?}", s, bad.first());
    }
}

#[test]
fn kappa_three_independence() {
    let t = Instant::now();
    assert!(kappa_independence_check(2, 1, 2).unwrap());
    eprintln!("kappa {:?}", t.elapsed());
}

#[test]
fn elem_sym_random() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let l = rng.gen_range(1..=4);
        let mut pts: Vec<BigRational> = Vec::new();
        while pts.len() < l {
            let x = BigRational::new(rng.gen_range(-20..20).into(), rng.gen_range(1..6).into());
            if !pts.contains(&x) {
                pts.push(x);
            }
        }
        assert_eq!(elem_sym_det(&pts), vandermonde_product(&pts));
    }
}

fn word_strategy(p: Presentation, max_level: u32) -> impl Strategy<Value = NCPoly> {
    let letters = p.letters(max_level);
    let n = letters.len();
    prop::collection::vec((prop::collection::vec(0..n, 0..4), -3i64..4), 1..3).prop_map(move |terms| {
        let mut x = NCPoly::zero();
        for (idx, c) in terms {
            let w = Word::from_factors(idx.iter().map(|&k| (letters[k], 1)));
            x.add_term(w, QRat::from_int(c) * QRat::q_pow(c as i32 % 2));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn straighten_idempotent_uqgl3(x in word_strategy(pres("uqgl:3"), 0)) {
        let p = pres("uqgl:3");
        let a = straighten(&p, &x, 0).unwrap();
        prop_assert_eq!(straighten(&p, &a, 0).unwrap(), a.clone());
        for (w, _) in a.terms() {
            prop_assert!(p.is_ordered(w));
        }
    }

    #[test]
    fn straighten_linear_yqsp(x in word_strategy(pres("yqsp:2"), 1), y in word_strategy(pres("yqsp:2"), 1)) {
        let p = pres("yqsp:2");
        let c = QRat::q() + QRat::one();
        let lhs = straighten(&p, &(&x.scale(&c) + &y), 2).unwrap();
        let rhs = &straighten(&p, &x, 2).unwrap().scale(&c) + &straighten(&p, &y, 2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn straighten_multiplicative_uqo(x in word_strategy(pres("uqo:3"), 0), y in word_strategy(pres("uqo:3"), 0)) {
        let p = pres("uqo:3");
        let xy = straighten(&p, &(&x * &y), 0).unwrap();
        let sx = straighten(&p, &x, 0).unwrap();
        let sy = straighten(&p, &y, 0).unwrap();
        prop_assert_eq!(xy, straighten(&p, &(&sx * &sy), 0).unwrap());
    }
}
