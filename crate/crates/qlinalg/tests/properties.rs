use exactmath::QRat;
use proptest::prelude::*;
use qlinalg::{envelope_dimension, kernel, kron, place_on_legs, rank, Mat};

fn scalar() -> impl Strategy<Value = QRat> {
    prop_oneof![
        3 => Just(QRat::zero()),
        1 => (-2i64..=2, -2i32..=2).prop_map(|(c, e)| QRat::signed_q_pow(c, e)),
        1 => (-2i64..=2).prop_map(|c| QRat::from_int(c) + QRat::q()),
    ]
}

fn mat(r: usize, c: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(scalar(), r * c)
        .prop_map(move |v| Mat::from_entries(r, c, v.into_iter().enumerate().map(|(k, x)| (k / c, k % c, x))))
}

fn invertible(n: usize) -> impl Strategy<Value = Mat> {
    // unit lower triangular times unit upper triangular
    (prop::collection::vec(scalar(), n * n), prop::collection::vec(scalar(), n * n)).prop_map(move |(a, b)| {
        let l = Mat::from_entries(
            n,
            n,
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| {
                (
                    i,
                    j,
                    if i == j {
                        QRat::one()
                    } else if i > j {
                        a[i * n + j].clone()
                    } else {
                        QRat::zero()
                    },
                )
            }),
        );
        let u = Mat::from_entries(
            n,
            n,
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| {
                (
                    i,
                    j,
                    if i == j {
                        QRat::one()
                    } else if i < j {
                        b[i * n + j].clone()
                    } else {
                        QRat::zero()
                    },
                )
            }),
        );
        l.mul(&u)
    })
}

fn inverse(m: &Mat) -> Mat {
    let n = m.nrows();
    let aug: Vec<qlinalg::SparseVec> = (0..n)
        .map(|i| {
            let mut r = m.row(i).clone();
            r.insert(n + i, QRat::one());
            r
        })
        .collect();
    let red = qlinalg::rref(aug, 2 * n);
    Mat::from_entries(
        n,
        n,
        red.rows
            .iter()
            .flat_map(|(p, row)| row.iter().filter(|(j, _)| **j >= n).map(move |(j, x)| (*p, j - n, x.clone()))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kron_mixed_product(a in mat(2, 2), b in mat(2, 2), c in mat(2, 2), d in mat(2, 2)) {
        prop_assert_eq!(kron(&a, &b).mul(&kron(&c, &d)), kron(&a.mul(&c), &b.mul(&d)));
    }

    #[test]
    fn disjoint_legs_commute(a in mat(4, 4), b in mat(4, 4)) {
        let x = place_on_legs(&a, (1, 2), 4, 2).unwrap();
        let y = place_on_legs(&b, (3, 4), 4, 2).unwrap();
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }

    #[test]
    fn envelope_conjugation_invariant(a in mat(3, 3), b in mat(3, 3), p in invertible(3)) {
        let pi = inverse(&p);
        prop_assert_eq!(p.mul(&pi), Mat::identity(3));
        let d0 = envelope_dimension(&[a.clone(), b.clone()], 3);
        let d1 = envelope_dimension(&[p.mul(&a).mul(&pi), p.mul(&b).mul(&pi)], 3);
        prop_assert_eq!(d0, d1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rank_nullity(a in mat(4, 5)) {
        prop_assert_eq!(rank(&a) + kernel(&a).dimension(), 5);
        for v in kernel(&a).basis() {
            prop_assert!(a.apply(v).iter().all(|x| x.is_zero()));
        }
    }
}
