use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely: `c[k]` is the coefficient of `q^(lo + k)`. The first and
/// last stored coefficients are nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    lo: i32,
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { lo: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(r: BigRational) -> Self {
        Self::monomial(r, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// `r * q^e`.
    pub fn monomial(r: BigRational, e: i32) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        QPoly { lo: e, c: vec![r] }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// Builds from a coefficient list starting at exponent `lo`.
    pub fn from_coeffs(lo: i32, c: Vec<BigRational>) -> Self {
        let mut p = QPoly { lo, c };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, r) in terms {
            acc = &acc + &Self::monomial(r, e);
        }
        acc
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i32;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest exponent with nonzero coefficient (`lo - 1` for zero).
    pub fn hi(&self) -> i32 {
        self.lo + self.c.len() as i32 - 1
    }

    pub fn nterms(&self) -> usize {
        self.c.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        let k = e - self.lo;
        if k < 0 || k as usize >= self.c.len() {
            BigRational::zero()
        } else {
            self.c[k as usize].clone()
        }
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.c.last()
    }

    pub fn low_coeff(&self) -> Option<&BigRational> {
        self.c.first()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> + '_ {
        self.c.iter().enumerate().filter(|(_, r)| !r.is_zero()).map(move |(k, r)| (self.lo + k as i32, r))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPoly { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        QPoly { lo: self.lo, c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.c.clone();
        c.reverse();
        QPoly { lo: -self.hi(), c }
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        // Horner on the dense part, then the q^lo factor.
        let mut acc = BigRational::zero();
        for x in self.c.iter().rev() {
            acc = acc * q0 + x;
        }
        acc * pow_rat(q0, self.lo)
    }

    /// Value at `q0` in the prime field `Z/p`, or `None` if some coefficient
    /// denominator vanishes mod `p`.
    pub fn eval_mod(&self, p: u64, q0: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let mut acc: u64 = 0;
        for x in self.c.iter().rev() {
            let n = residue(x.numer(), &pb);
            let d = residue(x.denom(), &pb);
            if d == 0 {
                return None;
            }
            let v = mulmod(n, inv_mod(d, p)?, p);
            acc = (mulmod(acc, q0, p) + v) % p;
        }
        let e = self.lo;
        let qe = if e >= 0 { pow_mod(q0, e as u64, p) } else { inv_mod(pow_mod(q0, (-e) as u64, p), p)? };
        Some(mulmod(acc, qe, p))
    }

    /// Polynomial division for genuine polynomials (`lo >= 0`).
    pub(crate) fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        debug_assert!(!d.is_zero());
        let a = self.dense();
        let b = d.dense();
        if a.len() < b.len() {
            return (QPoly::zero(), self.clone());
        }
        let mut r = a;
        let db = b.len() - 1;
        let lb = b[db].clone();
        let mut quo = vec![BigRational::zero(); r.len() - db];
        for k in (0..quo.len()).rev() {
            let t = &r[k + db] / &lb;
            if t.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    r[k + j] = &r[k + j] - &t * bj;
                }
            }
            quo[k] = t;
        }
        (QPoly::from_coeffs(0, quo), QPoly::from_coeffs(0, r))
    }

    fn dense(&self) -> Vec<BigRational> {
        debug_assert!(self.lo >= 0 || self.is_zero());
        let mut v = vec![BigRational::zero(); self.lo.max(0) as usize];
        v.extend(self.c.iter().cloned());
        v
    }

    /// Monic gcd of two genuine polynomials.
    pub(crate) fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.hi() < b.hi() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive();
        }
        if a.is_zero() {
            return a;
        }
        let l = a.lead().unwrap().clone();
        a.scale(&l.recip())
    }

    /// Rational content with the sign of the leading coefficient.
    pub(crate) fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for x in &self.c {
            if x.is_zero() {
                continue;
            }
            num = num.gcd(x.numer());
            den = den.lcm(x.denom());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        let c = BigRational::new(num, den);
        if self.lead().unwrap().is_negative() {
            -c
        } else {
            c
        }
    }

    /// Integer-coefficient primitive part with positive leading coefficient.
    pub(crate) fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&self.content().recip())
    }

    pub(crate) fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, r) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = r.is_negative();
            let a = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let qpart = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", e),
            };
            if a.is_one() {
                if qpart.is_empty() {
                    write!(f, "1")?;
                } else {
                    write!(f, "{}", qpart)?;
                }
            } else if qpart.is_empty() {
                write!(f, "{}", a)?;
            } else {
                write!(f, "{}*{}", a, qpart)?;
            }
        }
        Ok(())
    }
}

fn residue(x: &BigInt, p: &BigInt) -> u64 {
    let r = x.mod_floor(p);
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

pub(crate) fn pow_rat(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.hi().max(o.hi());
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (k, x) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + k] += x;
        }
        for (k, x) in o.c.iter().enumerate() {
            c[(o.lo - lo) as usize + k] += x;
        }
        QPoly::from_coeffs(lo, c)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { lo: self.lo, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        QPoly::from_coeffs(self.lo + o.lo, c)
    }
}
