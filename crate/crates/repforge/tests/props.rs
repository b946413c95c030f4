use exactmath::QRat;
use proptest::prelude::*;
use repforge::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn gl2_dimension_is_m_plus_one(b in -2i32..3, m in 0i32..4, s in prop::bool::ANY) {
        let sign = if s { 1 } else { -1 };
        let l = gl2_finite_module(&QRat::signed_q_pow(sign, b + m), &QRat::q_pow(b), DEFAULT_DEPTH).unwrap();
        prop_assert_eq!(l.dim(), m as usize + 1);
    }

    #[test]
    fn uqsp2_dimension_is_p_plus_one(a in -2i32..3, p in 0i32..3) {
        let mu = QRat::q_pow(a);
        let mp = QRat::signed_q_pow(-1, a + 2 * p + 1);
        prop_assert_eq!(uqsp2_module(&mu, &mp, DEFAULT_DEPTH).unwrap().dim(), p as usize + 1);
    }

    #[test]
    fn eval_twist_keeps_relations(c0 in 1i64..4, c1 in -3i64..4) {
        let m = eval_affine(&gl2_finite_module(&QRat::q(), &QRat::one(), DEFAULT_DEPTH).unwrap(), 2).unwrap();
        let m = twisted_restrict(&m).unwrap();
        let g = exactmath::USeries::from_prefix(exactmath::Dir::Neg, &[QRat::from_int(c0), QRat::from_int(c1)], 2);
        prop_assert!(verify_relations(&twist_by_series(&m, &g).unwrap()).unwrap().ok());
    }
}
