use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{MathError, QRat};

/// Dense polynomial in `u` with coefficients in Q(q); `c[k]` multiplies `u^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<QRat>,
}

impl Poly {
    pub fn new(mut c: Vec<QRat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![QRat::one()] }
    }

    pub fn constant(x: QRat) -> Self {
        Self::new(vec![x])
    }

    /// `1 + g u`.
    pub fn linear(g: QRat) -> Self {
        Self::new(vec![QRat::one(), g])
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.c.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&QRat> {
        self.c.last()
    }

    pub fn scale(&self, x: &QRat) -> Self {
        Self::new(self.c.iter().map(|a| a * x).collect())
    }

    /// `P(x u)`.
    pub fn subs_scale(&self, x: &QRat) -> Self {
        let mut p = QRat::one();
        let mut out = Vec::with_capacity(self.c.len());
        for a in &self.c {
            out.push(a * &p);
            p = &p * x;
        }
        Self::new(out)
    }

    /// `u^deg P(u^-1)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn eval(&self, x: &QRat) -> QRat {
        let mut acc = QRat::zero();
        for a in self.c.iter().rev() {
            acc = &acc * x + a;
        }
        acc
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), MathError> {
        let dd = d.degree().ok_or(MathError::DivisionByZero)?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let linv = d.c[dd].inv()?;
        let mut quo = vec![QRat::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let t = &r[k + dd] * &linv;
            if t.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                if !b.is_zero() {
                    r[k + j] = &r[k + j] - &(&t * b);
                }
            }
            quo[k] = t;
        }
        Ok((Poly::new(quo), Poly::new(r)))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        match a.lead() {
            None => a,
            Some(l) => {
                let inv = l.inv().unwrap();
                a.scale(&inv)
            }
        }
    }

    /// Rescales so the constant term is 1; `None` if it vanishes.
    pub fn normalized_const(&self) -> Option<Poly> {
        let c0 = self.c.first()?;
        if c0.is_zero() {
            return None;
        }
        Some(self.scale(&c0.inv().unwrap()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let s = a.to_string();
            let simple = !s.contains(['+', '/']) && !s[1..].contains('-');
            match (k, a.is_one()) {
                (0, _) => write!(f, "{}", s)?,
                (_, true) => write!(f, "u")?,
                _ if simple => write!(f, "{}*u", s)?,
                _ => write!(f, "({})*u", s)?,
            }
            if k > 1 {
                write!(f, "^{}", k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.iter().map(|a| -a).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![QRat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Poly::new(c)
    }
}
