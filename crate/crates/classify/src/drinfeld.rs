use std::collections::BTreeMap;

use exactmath::QRat;
use repforge::Param;
use serde_json::{json, Value};

use crate::factored::FactoredRat;
use crate::spiral::PairParam;
use crate::upoly::UPoly;
use crate::ClassifyError;

/// Drinfeld polynomials together with the gauge constants (`ε_i` or `φ_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldResult {
    pub polys: Vec<UPoly>,
    pub gauge: Vec<QRat>,
}

impl DrinfeldResult {
    /// Gauge rescaled so that its first entry is 1.
    pub fn normalized_gauge(&self) -> Vec<QRat> {
        match self.gauge.first() {
            Some(g0) => {
                let inv = g0.inv().expect("gauge constants are nonzero");
                self.gauge.iter().map(|g| g * &inv).collect()
            }
            None => Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "polys": self.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "expanded": self.polys.iter().map(|p| p.expanded().to_string()).collect::<Vec<_>>(),
            "gauge": self.gauge.iter().map(scalar_string).collect::<Vec<_>>(),
        })
    }
}

/// Signed powers of `q` print as `q^e`, `-q^e`, `q` or `1`; anything else
/// as a rational function.
pub fn scalar_string(x: &QRat) -> String {
    match x.as_signed_q_pow() {
        Some((s, e)) => {
            let sign = if s < 0 { "-" } else { "" };
            match e {
                0 => format!("{}1", sign),
                1 => format!("{}q", sign),
                e => format!("{}q^{}", sign, e),
            }
        }
        None => x.to_string(),
    }
}

fn sq_times_q2k(x: &Param, k: u32) -> Param {
    Param::from_qrat(&(&x.value() * &x.value()) * &QRat::q_pow(2 * k as i32)).unwrap()
}

/// `Π_i (1 + β_i² u)(1 + β_i² q² u) ... (1 + β_i² q^{2m_i-2} u)`.
pub fn drinfeld_from_pairs_gl2(pairs: &[PairParam]) -> UPoly {
    UPoly::from_factors(pairs.iter().flat_map(|p| (0..p.m()).map(|k| sq_times_q2k(p.beta(), k))).collect())
}

/// Drinfeld polynomials of the evaluation module `L(q^{m_1}, ..., q^{m_N})`:
/// `P_i(u) = (1 + q^{2m_{i+1}} u) ... (1 + q^{2m_i - 2} u)`.
pub fn drinfeld_eval_gl_n(m: &[i64]) -> Result<Vec<UPoly>, ClassifyError> {
    if m.windows(2).any(|w| w[0] < w[1]) {
        return Err(ClassifyError::Invalid(format!("{:?} is not non-increasing", m)));
    }
    Ok(m.windows(2).map(|w| UPoly::from_exponents((w[1]..w[0]).map(|k| 2 * k as i32))).collect())
}

/// `u^{deg P} P(u^{-1}) = q^{-deg P} P(u q²)`.
pub fn symmetry_check(p: &UPoly) -> bool {
    let d = p.degree() as i32;
    p.expanded().reversed() == p.subs_scale(&QRat::q_pow(2)).scale(&QRat::q_pow(-d))
}

/// `Π_i Π_k (1 + β_i² q^{2k} u)(1 + α_i^{-2} q^{2k} u)` over `0 <= k < m_i`.
pub fn drinfeld_sp2_from_pairs(pairs: &[PairParam]) -> UPoly {
    UPoly::from_factors(
        pairs
            .iter()
            .flat_map(|p| {
                let ai = p.alpha().inv();
                (0..p.m()).flat_map(move |k| [sq_times_q2k(p.beta(), k), sq_times_q2k(&ai, k)])
            })
            .collect(),
    )
}

/// Drinfeld polynomials and constants `φ_i = μ_i^{-1} q^{-p_i}` of the
/// evaluation module `V(μ; μ')` with `μ'_i = -q^{2p_i+1} μ_i`.
pub fn drinfeld_sp2n_eval(p: &[i64], mu: &[Param]) -> Result<DrinfeldResult, ClassifyError> {
    if p.len() != mu.len() || p.is_empty() {
        return Err(ClassifyError::Invalid("p and μ must have the same positive length".into()));
    }
    if p[0] < 0 || p.windows(2).any(|w| w[0] > w[1]) {
        return Err(ClassifyError::Invalid(format!("{:?} is not a nondecreasing list of nonnegative integers", p)));
    }
    let exp = |k: i64| k as i32;
    let mut polys = vec![UPoly::from_exponents((1..=p[0]).flat_map(|k| [exp(2 * k - 1), -exp(2 * k + 1)]))];
    for w in p.windows(2) {
        polys.push(UPoly::from_exponents((w[0] + 1..=w[1]).map(|k| -exp(2 * k + 1))));
    }
    let gauge = p.iter().zip(mu).map(|(&pi, m)| &m.value().inv().unwrap() * &QRat::q_pow(-exp(pi))).collect();
    Ok(DrinfeldResult { polys, gauge })
}

/// Solves `f = κ q^{-deg P} P(u q²) / P(u)` for a polynomial `P` with
/// constant term 1 and a constant `κ`.
pub fn extract_drinfeld(f: &FactoredRat) -> Option<(UPoly, QRat)> {
    if f.u_power() != 0 {
        return None;
    }
    // factors grouped into classes γ q^{2Z}, keyed by the offset in steps of q²
    let mut classes: Vec<(Param, BTreeMap<i32, i32>)> = Vec::new();
    for (g, m) in f.factors() {
        let found = classes.iter_mut().find_map(|(rep, net)| match (&g.value() / &rep.value()).as_signed_q_pow() {
            Some((1, e)) if e % 2 == 0 => Some((net, e / 2)),
            _ => None,
        });
        match found {
            Some((net, k)) => *net.entry(k).or_default() += m,
            None => classes.push((g.clone(), BTreeMap::from([(0, *m)]))),
        }
    }
    // the multiplicity n of γ in P(uq²)/P(u) is mult_P(γ q^-2) - mult_P(γ)
    let mut factors = Vec::new();
    for (rep, net) in &classes {
        let (lo, hi) = (*net.keys().next()?, *net.keys().next_back()?);
        let mut mult = 0i32;
        for k in lo..=hi {
            mult -= net.get(&k).copied().unwrap_or(0);
            if mult < 0 {
                return None;
            }
            let g = Param::from_qrat(&rep.value() * &QRat::q_pow(2 * k)).unwrap();
            factors.extend(std::iter::repeat_n(g, mult as usize));
        }
        if mult != 0 {
            return None;
        }
    }
    let p = UPoly::from_factors(factors);
    let kappa = f.scalar() * &QRat::q_pow(p.degree() as i32);
    Some((p, kappa))
}

/// Finite-dimensionality test for `L(ν_1(u), ν_2(u); ν̄_1(u), ν̄_2(u))` over
/// the quantum affine algebra of `gl_2`: the Drinfeld polynomial and the
/// signs `(ε_1, ε_2)` with `ε_1 = 1`, or `None`.
pub fn classify_gl2(
    nu1: &FactoredRat,
    nu2: &FactoredRat,
    nubar1: &FactoredRat,
    nubar2: &FactoredRat,
) -> Option<DrinfeldResult> {
    let f = nu1.div(nu2);
    if f != nubar1.div(nubar2) {
        return None;
    }
    let (p, kappa) = extract_drinfeld(&f)?;
    let sign = kappa.as_signed_q_pow().filter(|&(_, e)| e == 0)?.0;
    Some(DrinfeldResult { polys: vec![p], gauge: vec![QRat::one(), QRat::from_int(sign)] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: (i64, i32), b: (i64, i32)) -> PairParam {
        PairParam::new(Param::q_pow(a.0, a.1), Param::q_pow(b.0, b.1)).unwrap()
    }

    #[test]
    fn gl2_from_pairs() {
        assert_eq!(drinfeld_from_pairs_gl2(&[pair((1, 1), (1, 0))]), UPoly::from_exponents([0]));
        assert_eq!(drinfeld_from_pairs_gl2(&[pair((1, 2), (1, 0))]), UPoly::from_exponents([0, 2]));
        assert_eq!(drinfeld_from_pairs_gl2(&[pair((1, 2), (1, 2))]), UPoly::one());
        assert_eq!(drinfeld_from_pairs_gl2(&[pair((-1, 3), (-1, 1))]), UPoly::from_exponents([2, 4]));
    }

    #[test]
    fn gl_n_evaluation() {
        assert_eq!(drinfeld_eval_gl_n(&[1, 0]).unwrap(), vec![UPoly::from_exponents([0])]);
        assert_eq!(
            drinfeld_eval_gl_n(&[2, 1, 0]).unwrap(),
            vec![UPoly::from_exponents([2]), UPoly::from_exponents([0])]
        );
        assert_eq!(drinfeld_eval_gl_n(&[0, 0]).unwrap(), vec![UPoly::one()]);
        assert!(drinfeld_eval_gl_n(&[0, 1]).is_err());
    }

    #[test]
    fn symmetry() {
        assert!(symmetry_check(&UPoly::one()));
        assert!(symmetry_check(&UPoly::from_exponents([1, -3])));
        assert!(!symmetry_check(&UPoly::from_exponents([0])));
        let p = drinfeld_sp2_from_pairs(&[pair((1, 1), (1, 0))]);
        assert_eq!(p, UPoly::from_exponents([0, -2]));
        assert!(symmetry_check(&p));
        assert_eq!(drinfeld_sp2_from_pairs(&[]), UPoly::one());
        assert_eq!(drinfeld_from_pairs_gl2(&[]), UPoly::one());
    }

    #[test]
    fn sp2n_evaluation() {
        let r = drinfeld_sp2n_eval(&[1], &[Param::q_pow(1, 0)]).unwrap();
        assert_eq!(r.polys[0].to_string(), "(1+q u)(1+q^-3 u)");
        assert_eq!(r.gauge, vec![QRat::q_pow(-1)]);
        assert_eq!(r.to_json()["gauge"][0], "q^-1");
        assert_eq!(scalar_string(&QRat::signed_q_pow(-1, 1)), "-q");
        assert_eq!(drinfeld_sp2n_eval(&[0], &[Param::q_pow(1, 0)]).unwrap().polys, vec![UPoly::one()]);
        let r = drinfeld_sp2n_eval(&[1, 2], &[Param::q_pow(1, 0), Param::q_pow(1, 0)]).unwrap();
        assert_eq!(r.polys[1].to_string(), "(1+q^-5 u)");
        assert!(drinfeld_sp2n_eval(&[2, 1], &[Param::q_pow(1, 0), Param::q_pow(1, 0)]).is_err());
        assert_eq!(r.normalized_gauge()[0], QRat::one());
    }

    #[test]
    fn extraction_inverts_the_ratio() {
        for p in [UPoly::one(), UPoly::from_exponents([1, -3]), UPoly::from_exponents([0, 0, 2, 5])] {
            let d = p.degree() as i32;
            let f = FactoredRat::new(
                QRat::from_int(-3) * QRat::q_pow(-d),
                0,
                p.factors().iter().flat_map(|g| {
                    let up = Param::from_qrat(&g.value() * &QRat::q_pow(2)).unwrap();
                    [(up, 1), (g.clone(), -1)]
                }),
            )
            .unwrap();
            assert_eq!(extract_drinfeld(&f), Some((p, QRat::from_int(-3))));
        }
        let bad = FactoredRat::new(QRat::one(), 0, [(Param::q_pow(1, 0), 1)]).unwrap();
        assert_eq!(extract_drinfeld(&bad), None);
    }

    #[test]
    fn gl2_classification_of_tensor_weights() {
        // ν_1 = Π (α_i + α_i^{-1} u^{-1}), ν̄_1 = Π (α_i u + α_i^{-1})
        let pairs = [pair((-1, 2), (1, 0)), pair((1, 3), (1, 2))];
        let [mut n1, mut n2, mut b1, mut b2] = [0; 4].map(|_| FactoredRat::constant(QRat::one()).unwrap());
        for p in &pairs {
            let (a, b) = (p.alpha().value(), p.beta().value());
            let (ai, bi) = (a.inv().unwrap(), b.inv().unwrap());
            n1 = n1.mul(&FactoredRat::linear_neg(&a, &ai).unwrap());
            n2 = n2.mul(&FactoredRat::linear_neg(&b, &bi).unwrap());
            b1 = b1.mul(&FactoredRat::linear_pos(&ai, &a).unwrap());
            b2 = b2.mul(&FactoredRat::linear_pos(&bi, &b).unwrap());
        }
        let r = classify_gl2(&n1, &n2, &b1, &b2).unwrap();
        assert_eq!(r.polys[0], drinfeld_from_pairs_gl2(&pairs));
        assert_eq!(r.gauge[1], QRat::from_int(-1));
        assert!(classify_gl2(&n1, &n2, &b2, &b1).is_none());
    }
}
