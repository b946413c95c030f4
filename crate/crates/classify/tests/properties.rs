use classify::*;
use exactmath::{Dir, QRat, USeries};
use proptest::prelude::*;
use repforge::{highest_weight_of, twisted_eval, uqsp2_module, DEFAULT_DEPTH};

fn pair_strategy() -> impl Strategy<Value = PairParam> {
    (-3i32..4, 0i32..4, prop::bool::ANY, prop::bool::ANY).prop_map(|(b, m, sa, sb)| {
        let s = |x: bool| if x { 1 } else { -1 };
        PairParam::new(Param::q_pow(s(sa), b + m), Param::q_pow(s(sb), b)).unwrap()
    })
}

fn flip(p: &PairParam, ea: i64, eb: i64) -> PairParam {
    let f = |x: &Param, e: i64| match x {
        Param::QPow { sign, exp } => Param::q_pow(sign * e, *exp),
        g => g.clone(),
    };
    PairParam::new(f(p.alpha(), ea), f(p.beta(), eb)).unwrap()
}

/// `Π (γ + γ^{-1} u^{-1})` as a series in `u^{-1}`.
fn nu(gs: &[QRat], cap: usize) -> USeries {
    gs.iter().fold(USeries::constant(Dir::Neg, QRat::one(), cap), |acc, g| {
        acc.mul(&USeries::from_prefix(Dir::Neg, &[g.clone(), g.inv().unwrap()], cap))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn spiral_ignores_signs(p in pair_strategy(), ea in prop::bool::ANY, eb in prop::bool::ANY) {
        let s = |x: bool| if x { 1 } else { -1 };
        prop_assert_eq!(qspiral_from_pair(&p).unwrap(), qspiral_from_pair(&flip(&p, s(ea), s(eb))).unwrap());
    }

    #[test]
    fn predicates_are_permutation_invariant(v in prop::collection::vec(pair_strategy(), 0..5), seed in any::<u64>()) {
        let mut w = v.clone();
        let n = w.len();
        if n > 1 {
            w.rotate_left(seed as usize % n);
            w.swap(0, (seed as usize / 7) % n);
        }
        prop_assert_eq!(irr_predicate_affine(&v).unwrap(), irr_predicate_affine(&w).unwrap());
        prop_assert_eq!(irr_predicate_twisted(&v).unwrap(), irr_predicate_twisted(&w).unwrap());
    }

    #[test]
    fn sp2_polynomials_are_symmetric(v in prop::collection::vec(pair_strategy(), 0..4)) {
        prop_assert!(symmetry_check(&drinfeld_sp2_from_pairs(&v)));
    }

    #[test]
    fn gl2_polynomial_satisfies_ratio_identity(v in prop::collection::vec(pair_strategy(), 1..4)) {
        let cap = 8;
        let alphas: Vec<QRat> = v.iter().map(|p| p.alpha().value()).collect();
        let betas: Vec<QRat> = v.iter().map(|p| p.beta().value()).collect();
        let ratio = nu(&alphas, cap).mul(&nu(&betas, cap).invert().unwrap());
        let p = drinfeld_from_pairs_gl2(&v);
        let d = p.degree() as i32;
        let num = p.subs_scale(&QRat::q_pow(2)).scale(&QRat::q_pow(-d));
        let rhs = exactmath::ratio_expand(&num, p.expanded(), Dir::Neg, cap).unwrap();
        prop_assert!(ratio == rhs || ratio == rhs.scale(&QRat::from_int(-1)));
    }
}

#[test]
fn twisted_eval_pipeline_matches_closed_form() {
    for p in 0..4i32 {
        for mu in [QRat::one(), QRat::signed_q_pow(-1, 1)] {
            let mp = -&(&mu * &QRat::q_pow(2 * p + 1));
            let v = uqsp2_module(&mu, &mp, DEFAULT_DEPTH).unwrap();
            assert_eq!(v.dim(), p as usize + 1);
            let m = twisted_eval(&v, 8).unwrap();
            let mut top = vec![QRat::zero(); m.dim()];
            top[m.highest_index().unwrap()] = QRat::one();
            let hw = highest_weight_of(&m, &top).unwrap();
            let fw = factor_highest_weight(&hw, 3).unwrap();
            let want = drinfeld_sp2n_eval(&[p as i64], &[Param::from_qrat(mu.clone()).unwrap()]).unwrap();
            assert_eq!(classify_sp2n(&fw).unwrap(), Sp2nVerdict::Finite(want));
            let pade = ratio_condition_check(RatioKind::Twisted, &hw.main, &hw.bar, 3).unwrap();
            assert_eq!(pade[0].den.degree(), Some(if p == 0 { 0 } else { 2 }));
        }
    }
}

#[test]
fn series_input_must_factor() {
    let s = USeries::from_prefix(Dir::Neg, &[QRat::one(), QRat::one(), QRat::from_int(3)], 8);
    let e = FactoredRat::from_series(&s, 2).unwrap_err();
    assert!(e.to_string().starts_with("factored form required"));
}
