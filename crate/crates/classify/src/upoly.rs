use std::cmp::Ordering;
use std::fmt;

use exactmath::{Poly, QRat};
use repforge::Param;
use serde_json::{json, Value};

/// Polynomial `(1 + γ_1 u) ... (1 + γ_k u)` with constant term 1, kept both
/// as a canonically sorted factor list and expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    factors: Vec<Param>,
    expanded: Poly,
}

/// Factors are ordered by `|exponent|`, then positive exponents first, then `+` before `-`.
pub(crate) fn factor_order(a: &Param, b: &Param) -> Ordering {
    match (a, b) {
        (Param::QPow { sign: s, exp: e }, Param::QPow { sign: t, exp: f }) => {
            (e.abs(), *e < 0, -s).cmp(&(f.abs(), *f < 0, -t))
        }
        (Param::QPow { .. }, Param::General(_)) => Ordering::Less,
        (Param::General(_), Param::QPow { .. }) => Ordering::Greater,
        (Param::General(x), Param::General(y)) => x.to_string().cmp(&y.to_string()),
    }
}

impl UPoly {
    pub fn one() -> Self {
        UPoly { factors: Vec::new(), expanded: Poly::one() }
    }

    pub fn from_factors(mut factors: Vec<Param>) -> Self {
        factors.sort_by(factor_order);
        let mut expanded = Poly::one();
        for g in &factors {
            expanded = &expanded * &Poly::linear(g.value());
        }
        UPoly { factors, expanded }
    }

    /// `(1 + q^{e_1} u) ... (1 + q^{e_k} u)`.
    pub fn from_exponents<I: IntoIterator<Item = i32>>(exps: I) -> Self {
        Self::from_factors(exps.into_iter().map(|e| Param::q_pow(1, e)).collect())
    }

    pub fn factors(&self) -> &[Param] {
        &self.factors
    }

    pub fn expanded(&self) -> &Poly {
        &self.expanded
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        Self::from_factors(self.factors.iter().chain(&o.factors).cloned().collect())
    }

    /// `P(x u)`.
    pub fn subs_scale(&self, x: &QRat) -> Poly {
        self.expanded.subs_scale(x)
    }

    pub fn to_json(&self) -> Value {
        json!({ "factored": self.to_string(), "expanded": self.expanded.to_string() })
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for g in &self.factors {
            match g {
                Param::QPow { sign, exp } => {
                    let s = if *sign > 0 { '+' } else { '-' };
                    match exp {
                        0 => write!(f, "(1{}u)", s)?,
                        1 => write!(f, "(1{}q u)", s)?,
                        e => write!(f, "(1{}q^{} u)", s, e)?,
                    }
                }
                Param::General(x) => write!(f, "(1+({}) u)", x)?,
            }
        }
        Ok(())
    }
}
