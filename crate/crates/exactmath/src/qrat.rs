use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qpoly::{inv_mod, mulmod, QPoly};
use crate::MathError;

/// Element of the rational function field Q(q) in canonical form.
///
/// `den` is a polynomial with nonzero constant term, integer coprime
/// coefficients and positive leading coefficient; every power of `q` and
/// every rational constant lives in `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        QRat { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QRat { num: QPoly::from_int(n), den: QPoly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "division by zero in base field");
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        QRat { num: QPoly::constant(r), den: QPoly::one() }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat { num: p, den: QPoly::one() }
    }

    /// `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        QRat { num: QPoly::q_pow(e), den: QPoly::one() }
    }

    /// `s * q^e`.
    pub fn signed_q_pow(s: i64, e: i32) -> Self {
        QRat { num: QPoly::monomial(BigRational::from_integer(BigInt::from(s)), e), den: QPoly::one() }
    }

    /// `q - q^-1`.
    pub fn q_minus_qinv() -> Self {
        Self::from_poly(&QPoly::q_pow(1) - &QPoly::q_pow(-1))
    }

    /// Canonical form of `num / den`.
    pub fn normalize(num: QPoly, den: QPoly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let k = den.lo();
        let den = den.shift(-k);
        let num = num.shift(-k);
        if den.hi() == 0 {
            let c = den.lead().unwrap().recip();
            return Ok(QRat { num: num.scale(&c), den: QPoly::one() });
        }
        let n0 = num.lo();
        let mut np = num.shift(-n0);
        let mut dp = den;
        let g = np.gcd(&dp);
        if g.hi() > 0 {
            np = np.divrem(&g).0;
            dp = dp.divrem(&g).0;
        }
        let c = dp.content();
        let inv = c.recip();
        Ok(QRat { num: np.scale(&inv).shift(n0), den: dp.scale(&inv) })
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Returns `(s, e)` when `self = s * q^e` with `s` a nonzero rational.
    pub fn as_monomial(&self) -> Option<(BigRational, i32)> {
        if self.den.is_one() && self.num.nterms() == 1 {
            Some((self.num.lead().unwrap().clone(), self.num.lo()))
        } else {
            None
        }
    }

    /// Returns `(±1, e)` when `self = ±q^e`.
    pub fn as_signed_q_pow(&self) -> Option<(i64, i32)> {
        let (c, e) = self.as_monomial()?;
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    /// Rough size used for pivot selection.
    pub fn size(&self) -> usize {
        let bits =
            |p: &QPoly| -> usize { p.terms().map(|(_, r)| (r.numer().bits() + r.denom().bits()) as usize + 1).sum() };
        bits(&self.num) + bits(&self.den)
    }

    pub fn inv(&self) -> Result<Self, MathError> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if let Some((c, e)) = self.as_monomial() {
            return Ok(QRat { num: QPoly::monomial(c.recip(), -e), den: QPoly::one() });
        }
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("division by zero in base field") } else { self.clone() };
        let mut acc = QRat::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        acc
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        Self::normalize(self.num.invert_q(), self.den.invert_q()).unwrap()
    }

    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, MathError> {
        if q0.is_zero() {
            return Err(MathError::PoleAtSpecialization);
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(MathError::PoleAtSpecialization);
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Value in `Z/p` at `q = q0`, or `None` at a pole.
    pub fn eval_mod(&self, p: u64, q0: u64) -> Option<u64> {
        let n = self.num.eval_mod(p, q0)?;
        let d = self.den.eval_mod(p, q0)?;
        Some(mulmod(n, inv_mod(d, p)?, p))
    }

    fn add_impl(&self, o: &QRat) -> QRat {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return QRat { num: &self.num + &o.num, den: QPoly::one() };
        }
        if self.den == o.den {
            return Self::normalize(&self.num + &o.num, self.den.clone()).unwrap();
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::normalize(n, &self.den * &o.den).unwrap()
    }

    fn mul_impl(&self, o: &QRat) -> QRat {
        if self.is_zero() || o.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return QRat { num: &self.num * &o.num, den: QPoly::one() };
        }
        if let Some((c, e)) = o.as_monomial() {
            return QRat { num: self.num.scale(&c).shift(e), den: self.den.clone() };
        }
        if let Some((c, e)) = self.as_monomial() {
            return QRat { num: o.num.scale(&c).shift(e), den: o.den.clone() };
        }
        Self::normalize(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = (-self.num.lo()).max(0);
        let n = self.num.shift(k);
        let d = self.den.shift(k);
        if d.is_one() {
            return write!(f, "{}", n);
        }
        if n.nterms() > 1 {
            write!(f, "({})", n)?;
        } else {
            write!(f, "{}", n)?;
        }
        if d.nterms() > 1 {
            write!(f, "/({})", d)
        } else {
            write!(f, "/{}", d)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for QRat {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self, MathError> {
        crate::parse::parse_qrat(s)
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::one()
    }
}

impl From<i64> for QRat {
    fn from(n: i64) -> Self {
        QRat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:expr) => {
        impl<'a> $tr<&'a QRat> for &'a QRat {
            type Output = QRat;
            fn $m(self, o: &QRat) -> QRat {
                $imp(self, o)
            }
        }
        impl $tr<QRat> for QRat {
            type Output = QRat;
            fn $m(self, o: QRat) -> QRat {
                $imp(&self, &o)
            }
        }
        impl<'a> $tr<&'a QRat> for QRat {
            type Output = QRat;
            fn $m(self, o: &QRat) -> QRat {
                $imp(&self, o)
            }
        }
        impl<'a> $tr<QRat> for &'a QRat {
            type Output = QRat;
            fn $m(self, o: QRat) -> QRat {
                $imp(self, &o)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QRat, b: &QRat| a.add_impl(b));
forward_binop!(Sub, sub, |a: &QRat, b: &QRat| a.add_impl(&-b));
forward_binop!(Mul, mul, |a: &QRat, b: &QRat| a.mul_impl(b));
forward_binop!(Div, div, |a: &QRat, b: &QRat| a.mul_impl(&b.inv().expect("division by zero in base field")));

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, o: &QRat) {
        *self = self.add_impl(o);
    }
}

impl AddAssign<QRat> for QRat {
    fn add_assign(&mut self, o: QRat) {
        *self = self.add_impl(&o);
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, o: &QRat) {
        *self = self.add_impl(&-o);
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, o: &QRat) {
        *self = self.mul_impl(o);
    }
}

impl Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> Self {
        iter.fold(QRat::zero(), |a, b| a + b)
    }
}

impl Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> Self {
        iter.fold(QRat::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_cancels() {
        let x = QRat::normalize(p("q^2-1").num().clone(), p("q-1").num().clone()).unwrap();
        assert_eq!(x, p("q+1"));
    }

    #[test]
    fn normalize_zero_numerator() {
        let x = QRat::normalize(QPoly::zero(), QPoly::from_int(5)).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn normalize_absorbs_units() {
        let x = QRat::q_minus_qinv();
        assert_eq!(x.to_string(), "(q^2-1)/q");
        assert!(x.is_laurent());
    }

    #[test]
    fn zero_denominator_rejected() {
        let e = QRat::normalize(QPoly::one(), QPoly::zero()).unwrap_err();
        assert_eq!(e.to_string(), "division by zero in base field");
    }

    #[test]
    fn eval_examples() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(p("(q^2-1)/q").eval_at(&two).unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(p("q+1").eval_at(&BigRational::one()).unwrap(), two);
        let e = p("1/(q-1)").eval_at(&BigRational::one()).unwrap_err();
        assert!(e.to_string().contains("pole"));
    }

    #[test]
    fn canonical_denominator() {
        let x = p("3/(2*q^2-4*q)");
        assert_eq!(x.den().lo(), 0);
        assert_eq!(x.den().lead().unwrap(), &BigRational::one());
        assert_eq!(x, p("3/2/(q^2-2*q)"));
        let y = p("1/(1-q)");
        assert_eq!(y, -p("1/(q-1)"));
    }

    #[test]
    fn monomial_inverse() {
        assert_eq!(p("-2*q^3").inv().unwrap(), p("-1/2*q^-3"));
    }
}
