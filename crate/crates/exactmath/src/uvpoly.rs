use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::QRat;

/// Polynomial in two spectral parameters `u`, `v`, keyed by `(deg u, deg v)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UVPoly {
    terms: BTreeMap<(i32, i32), QRat>,
}

impl UVPoly {
    pub fn zero() -> Self {
        UVPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: QRat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: QRat, du: i32, dv: i32) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert((du, dv), c);
        }
        p
    }

    /// `a u + b v`.
    pub fn linear(a: QRat, b: QRat) -> Self {
        &Self::monomial(a, 1, 0) + &Self::monomial(b, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, du: i32, dv: i32) -> QRat {
        self.terms.get(&(du, dv)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &QRat) -> Self {
        let mut p = Self::zero();
        for (k, x) in &self.terms {
            let y = x * c;
            if !y.is_zero() {
                p.terms.insert(*k, y);
            }
        }
        p
    }

    /// Swaps the roles of `u` and `v`.
    pub fn swap_uv(&self) -> Self {
        UVPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    /// Applies `q -> q^-1` to every coefficient.
    pub fn invert_q(&self) -> Self {
        UVPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.invert_q())).collect() }
    }

    pub fn eval(&self, u: &QRat, v: &QRat) -> QRat {
        self.terms.iter().map(|(&(a, b), c)| c * &u.pow(a) * v.pow(b)).sum()
    }

    fn add_term(&mut self, k: (i32, i32), c: QRat) {
        let e = self.terms.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }
}

impl<'a> Add<&'a UVPoly> for &'a UVPoly {
    type Output = UVPoly;
    fn add(self, o: &UVPoly) -> UVPoly {
        let mut p = self.clone();
        for (k, c) in &o.terms {
            p.add_term(*k, c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a UVPoly> for &'a UVPoly {
    type Output = UVPoly;
    fn sub(self, o: &UVPoly) -> UVPoly {
        self + &(-o)
    }
}

impl Neg for &UVPoly {
    type Output = UVPoly;
    fn neg(self) -> UVPoly {
        UVPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl<'a> Mul<&'a UVPoly> for &'a UVPoly {
    type Output = UVPoly;
    fn mul(self, o: &UVPoly) -> UVPoly {
        let mut p = UVPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &o.terms {
                p.add_term((a + c, b + d), x * y);
            }
        }
        p
    }
}

impl fmt::Display for UVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut s = format!("({})", c);
                if a != 0 {
                    s.push_str(&format!("*u^{}", a));
                }
                if b != 0 {
                    s.push_str(&format!("*v^{}", b));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for UVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
