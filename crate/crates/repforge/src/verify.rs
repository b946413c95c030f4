//! Defining relations evaluated on the action matrices.

use exactmath::QRat;
use qlinalg::Mat;
use rttcore::{AlgebraId, GenId, NCPoly};
use serde_json::{json, Value};

use crate::analysis::{highest_weight_of, mu_prime_from};
use crate::construct::sbar_from_s;
use crate::module::ModuleRep;
use crate::RepError;

/// Extra truncation depth so that every relation coefficient whose letters
/// stay within the cap is complete.
const TRUNC_MARGIN: u32 = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualFailure {
    pub relation: String,
    pub nnz: usize,
    /// Entry of the residual with the largest expression.
    pub entry: (usize, usize, QRat),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ResidualReport {
    pub checked: usize,
    pub failures: Vec<ResidualFailure>,
}

impl ResidualReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, relation: impl FnOnce() -> String, residual: &Mat) {
        self.checked += 1;
        if let Some(entry) = residual.largest_entry() {
            self.failures.push(ResidualFailure { relation: relation(), nnz: residual.nnz(), entry });
        }
    }

    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "relation": f.relation,
                    "nnz": f.nnz,
                    "entry": [f.entry.0, f.entry.1, f.entry.2.to_string()],
                })
            })
            .collect();
        json!({ "checked": self.checked, "failures": failures })
    }
}

fn eval_poly(m: &ModuleRep, x: &NCPoly) -> Result<Mat, RepError> {
    let mut acc = Mat::zeros(m.dim(), m.dim());
    for (w, c) in x.terms() {
        acc = acc.add(&m.word_action(w)?.scale(c));
    }
    Ok(acc)
}

fn short(x: &NCPoly) -> String {
    let s = x.to_string();
    if s.chars().count() > 120 {
        format!("{}...", s.chars().take(120).collect::<String>())
    } else {
        s
    }
}

/// Evaluates every coefficient of the defining matrix relations with all
/// levels within the cap, the inverse pairs `t_ii t̄_ii = 1` of the
/// non-extended algebras and, for `yqsp`, the relation between `s̄` and `s`
/// together with the eigenvalue of `s_12(u)` on the highest vector.
pub fn verify_relations(m: &ModuleRep) -> Result<ResidualReport, RepError> {
    let p = m.presentation();
    let id = p.id();
    let mut report = ResidualReport::default();
    let trunc = if id.has_levels() { m.cap() + TRUNC_MARGIN } else { 0 };
    for inst in p.relation_instances(trunc) {
        if inst.max_level() > m.cap() {
            continue;
        }
        let r = eval_poly(m, &inst)?;
        report.record(|| short(&inst), &r);
    }
    if id.is_gl_type() && !id.is_ext() {
        let one = Mat::identity(m.dim());
        for i in 1..=p.n() {
            let t = m.action(GenId::t(i, i, 0))?;
            let tb = m.action(GenId::tb(i, i, 0))?;
            report.record(|| format!("t[{i},{i};0]*tb[{i},{i};0] - 1"), &t.mul(&tb).sub(&one));
            report.record(|| format!("tb[{i},{i};0]*t[{i},{i};0] - 1"), &tb.mul(&t).sub(&one));
        }
    }
    if id == AlgebraId::Yqsp {
        for (g, want) in sbar_from_s(m)? {
            report.record(|| format!("{} from the s-series", g), &m.action(g)?.sub(&want));
        }
        if let (Some(h), 2) = (m.highest_index(), p.n()) {
            let mut v = vec![QRat::zero(); m.dim()];
            v[h] = QRat::one();
            match highest_weight_of(m, &v) {
                Ok(hw) => {
                    let want = mu_prime_from(&hw.main[0], &hw.bar[0]);
                    let s12 = m.action(GenId::s(1, 2, 0))?;
                    for r in 0..=m.cap() {
                        let d = &want.coeff(r as usize).clone() - &hw.primed[0].coeff(r as usize).clone();
                        let mut res = Mat::zeros(s12.nrows(), s12.ncols());
                        res.set(h, h, d);
                        report.record(|| format!("eigenvalue of s[1,2;{}] on the highest vector", r), &res);
                    }
                }
                Err(e) => {
                    let mut res = Mat::zeros(m.dim(), m.dim());
                    res.set(h, h, QRat::one());
                    report.record(|| format!("highest vector: {}", e), &res);
                }
            }
        }
    }
    Ok(report)
}
