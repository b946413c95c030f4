//! The defining relations written entry by entry, straightened to zero.

use std::collections::BTreeMap;

use exactmath::QRat;
use rttcore::{straighten, GenId, NCPoly, Presentation};

fn qp(e: i32) -> QRat {
    QRat::q_pow(e)
}

fn d(a: bool) -> i32 {
    a as i32
}

#[test]
fn orthogonal_relations_entrywise() {
    let n = 3;
    let p: Presentation = "uqo:3".parse().unwrap();
    let s = |i: usize, j: usize| -> NCPoly {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => NCPoly::one(),
            std::cmp::Ordering::Less => NCPoly::zero(),
            std::cmp::Ordering::Greater => NCPoly::gen(GenId::s(i, j, 0)),
        }
    };
    let h = QRat::q_minus_qinv();
    let mut checked = 0;
    for i in 1..=n {
        for a in 1..=n {
            for j in 1..=n {
                for b in 1..=n {
                    let lhs = &(&s(i, a) * &s(j, b)).scale(&qp(d(a == j) + d(i == j)))
                        - &(&s(j, b) * &s(i, a)).scale(&qp(d(a == b) + d(i == b)));
                    let mut rhs = (&s(j, a) * &s(i, b))
                        .scale(&(&(&h * &qp(d(a == i))) * &QRat::from_int((d(b < a) - d(i < j)) as i64)));
                    rhs = &rhs + &(&s(j, i) * &s(b, a)).scale(&(&h * &qp(d(a == b))).scale_int(d(b < i)));
                    rhs = &rhs - &(&s(i, j) * &s(a, b)).scale(&(&h * &qp(d(i == j))).scale_int(d(a < j)));
                    rhs = &rhs
                        + &(&s(j, i) * &s(a, b)).scale(&(&h * &h).scale_int(d(b < a && a < i) - d(a < i && i < j)));
                    let x = &lhs - &rhs;
                    assert!(straighten(&p, &x, 0).unwrap().is_zero(), "(i,a,j,b)=({},{},{},{})", i, a, j, b);
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 81);
}

trait ScaleInt {
    fn scale_int(&self, k: i32) -> QRat;
}

impl ScaleInt for QRat {
    fn scale_int(&self, k: i32) -> QRat {
        self * &QRat::from_int(k as i64)
    }
}

type Series2 = BTreeMap<(i32, i32), NCPoly>;

fn add(acc: &mut Series2, k: (i32, i32), x: NCPoly) {
    let e = acc.entry(k).or_default();
    *e = &*e + &x;
}

#[test]
fn affine_relations_entrywise() {
    let n = 2;
    let top = 2u32;
    let p: Presentation = "uqaff:2".parse().unwrap();
    let t = |i: usize, j: usize, r: u32| -> NCPoly {
        if r == 0 && i < j {
            NCPoly::zero()
        } else {
            NCPoly::gen(GenId::t(i, j, r))
        }
    };
    // product x(u) y(v) with x from the u-series and y from the v-series, both of the t family
    let prod = |(i, a): (usize, usize), (j, b): (usize, usize), u_first: bool, cu: (i32, i32, QRat)| -> Series2 {
        let mut out = Series2::new();
        for r in 0..=top + 1 {
            for s in 0..=top + 1 {
                let w = if u_first { &t(i, a, r) * &t(j, b, s) } else { &t(j, b, s) * &t(i, a, r) };
                // u-series index r, v-series index s
                add(&mut out, (cu.0 - r as i32, cu.1 - s as i32), w.scale(&cu.2));
            }
        }
        out
    };
    let h = &qp(-1) - &QRat::q();
    for i in 1..=n {
        for a in 1..=n {
            for j in 1..=n {
                for b in 1..=n {
                    let mut lhs = Series2::new();
                    let dij = d(i == j);
                    let dab = d(a == b);
                    let mut put = |sign: i32, x: Series2| {
                        for (k, v) in x {
                            add(&mut lhs, k, v.scale(&QRat::from_int(sign as i64)));
                        }
                    };
                    put(1, prod((i, a), (j, b), true, (1, 0, qp(-dij))));
                    put(1, prod((i, a), (j, b), true, (0, 1, -qp(dij))));
                    if i > j {
                        put(1, prod((j, a), (i, b), true, (1, 0, h.clone())));
                    }
                    if i < j {
                        put(1, prod((j, a), (i, b), true, (0, 1, h.clone())));
                    }
                    put(-1, prod((i, a), (j, b), false, (1, 0, qp(-dab))));
                    put(-1, prod((i, a), (j, b), false, (0, 1, -qp(dab))));
                    // t_ja(v) t_ib(u): the u-series carries (i,b), the v-series (j,a)
                    if a < b {
                        put(-1, prod((i, b), (j, a), false, (1, 0, h.clone())));
                    }
                    if a > b {
                        put(-1, prod((i, b), (j, a), false, (0, 1, h.clone())));
                    }
                    for ((eu, ev), x) in lhs {
                        // only coefficients unaffected by the truncation
                        if 1 - eu > top as i32 || 1 - ev > top as i32 {
                            continue;
                        }
                        assert!(
                            straighten(&p, &x, top).unwrap().is_zero(),
                            "({},{},{},{}) at u^{} v^{}",
                            i,
                            a,
                            j,
                            b,
                            eu,
                            ev
                        );
                    }
                }
            }
        }
    }
}
