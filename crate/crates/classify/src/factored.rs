use std::fmt;

use exactmath::{dense_kernel, ratio_expand, Dir, Poly, QRat, USeries};
use repforge::Param;

use crate::upoly::factor_order;
use crate::ClassifyError;

/// Rational function `c · u^k · Π (1 + γ u)^{m_γ}` with distinct `γ` and
/// nonzero multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRat {
    c: QRat,
    k: i32,
    factors: Vec<(Param, i32)>,
}

fn canonical(p: &Param) -> Param {
    Param::from_qrat(p.value()).expect("factor parameters are nonzero")
}

impl FactoredRat {
    pub fn new<I: IntoIterator<Item = (Param, i32)>>(c: QRat, k: i32, factors: I) -> Result<Self, ClassifyError> {
        if c.is_zero() {
            return Err(ClassifyError::Invalid("scalar factor must be nonzero".into()));
        }
        let mut fs: Vec<(Param, i32)> = Vec::new();
        for (g, m) in factors {
            let g = canonical(&g);
            match fs.iter_mut().find(|(h, _)| *h == g) {
                Some((_, n)) => *n += m,
                None => fs.push((g, m)),
            }
        }
        fs.retain(|(_, m)| *m != 0);
        fs.sort_by(|a, b| factor_order(&a.0, &b.0));
        Ok(FactoredRat { c, k, factors: fs })
    }

    pub fn constant(c: QRat) -> Result<Self, ClassifyError> {
        Self::new(c, 0, [])
    }

    /// `a + b u`.
    pub fn linear_pos(a: &QRat, b: &QRat) -> Result<Self, ClassifyError> {
        if b.is_zero() {
            Self::constant(a.clone())
        } else if a.is_zero() {
            Self::new(b.clone(), 1, [])
        } else {
            Self::new(a.clone(), 0, [(Param::from_qrat(b / a).unwrap(), 1)])
        }
    }

    /// `a + b u^{-1}`.
    pub fn linear_neg(a: &QRat, b: &QRat) -> Result<Self, ClassifyError> {
        Ok(Self::linear_pos(a, b)?.invert_u())
    }

    pub fn scalar(&self) -> &QRat {
        &self.c
    }

    pub fn u_power(&self) -> i32 {
        self.k
    }

    pub fn factors(&self) -> &[(Param, i32)] {
        &self.factors
    }

    pub fn is_constant(&self) -> bool {
        self.k == 0 && self.factors.is_empty()
    }

    pub fn mul(&self, o: &FactoredRat) -> FactoredRat {
        Self::new(&self.c * &o.c, self.k + o.k, self.factors.iter().chain(&o.factors).cloned()).unwrap()
    }

    pub fn inv(&self) -> FactoredRat {
        Self::new(self.c.inv().unwrap(), -self.k, self.factors.iter().map(|(g, m)| (g.clone(), -m))).unwrap()
    }

    pub fn div(&self, o: &FactoredRat) -> FactoredRat {
        self.mul(&o.inv())
    }

    pub fn scale(&self, x: &QRat) -> Result<FactoredRat, ClassifyError> {
        Self::new(&self.c * x, self.k, self.factors.clone())
    }

    /// The function `F(u^{-1})`.
    pub fn invert_u(&self) -> FactoredRat {
        let mut c = self.c.clone();
        let mut k = -self.k;
        for (g, m) in &self.factors {
            c = &c * &g.value().pow(*m);
            k -= m;
        }
        Self::new(c, k, self.factors.iter().map(|(g, m)| (g.inv(), *m))).unwrap()
    }

    /// Degree in `u` of the leading term of the expansion in `u^{-1}`.
    pub fn neg_order(&self) -> i32 {
        self.k + self.factors.iter().map(|(_, m)| m).sum::<i32>()
    }

    /// Leading coefficient of the expansion in `u^{-1}`.
    pub fn neg_lead(&self) -> QRat {
        self.factors.iter().fold(self.c.clone(), |acc, (g, m)| &acc * &g.value().pow(*m))
    }

    /// Power series expansion; in the `Neg` direction it needs
    /// `neg_order() <= 0`, in the `Pos` direction `u_power() >= 0`.
    pub fn expand(&self, dir: Dir, cap: usize) -> Result<USeries, ClassifyError> {
        let (src, shift) = match dir {
            Dir::Pos => (self.clone(), self.k),
            Dir::Neg => (self.invert_u(), -self.neg_order()),
        };
        if shift < 0 {
            return Err(ClassifyError::Invalid(format!("{} has a pole at the expansion point", self)));
        }
        let mut s = USeries::constant(Dir::Pos, src.c.clone(), cap);
        for (g, m) in &src.factors {
            let mut f = USeries::from_prefix(Dir::Pos, &[QRat::one(), g.value()], cap);
            if *m < 0 {
                f = f.invert()?;
            }
            for _ in 0..m.unsigned_abs() {
                s = s.mul(&f);
            }
        }
        let shift = shift as usize;
        let mut out = USeries::zero(dir, cap);
        for j in shift..=cap {
            out.set_coeff(j, s.coeff(j - shift).clone());
        }
        Ok(out)
    }

    /// Rational reconstruction of a truncated series (numerator and
    /// denominator degree at most `dmax`) followed by factorization into
    /// `1 + γ u` with `γ = ±q^e`.
    pub fn from_series(s: &USeries, dmax: usize) -> Result<FactoredRat, ClassifyError> {
        let fail = |why: &str| ClassifyError::FactoredRequired(format!("{} ({})", s, why));
        if s.cap() < 2 * dmax + 1 {
            return Err(fail("too few coefficients for the degree bound"));
        }
        if s.is_zero() {
            return Err(fail("zero series"));
        }
        let d = dmax;
        let mut rows = Vec::new();
        for k in 0..=s.cap() {
            let mut row = vec![QRat::zero(); 2 * (d + 1)];
            if k <= d {
                row[k] = QRat::from_int(-1);
            }
            for j in 0..=d.min(k) {
                row[d + 1 + j] = s.coeff(k - j).clone();
            }
            rows.push(row);
        }
        let v = dense_kernel(rows, 2 * (d + 1)).into_iter().next().ok_or_else(|| fail("not rational"))?;
        let (a, b) = (Poly::new(v[..=d].to_vec()), Poly::new(v[d + 1..].to_vec()));
        let g = a.gcd(&b);
        let (a, b) = (a.divrem(&g)?.0, b.divrem(&g)?.0);
        let b0 = b.coeff(0);
        if b0.is_zero() {
            return Err(fail("denominator vanishes at the expansion point"));
        }
        let (a, b) = (a.scale(&b0.inv()?), b.scale(&b0.inv()?));
        let check = ratio_expand(&a, &b, Dir::Pos, s.cap())?;
        if check.coeffs() != s.coeffs() {
            return Err(fail("not rational"));
        }
        let (ca, ja, ga) = factor_signed_q_pow(&a).ok_or_else(|| fail("numerator does not split"))?;
        let (_, _, gb) = factor_signed_q_pow(&b).ok_or_else(|| fail("denominator does not split"))?;
        let f = Self::new(ca, ja as i32, ga.into_iter().map(|g| (g, 1)).chain(gb.into_iter().map(|g| (g, -1))))?;
        Ok(match s.dir() {
            Dir::Pos => f,
            Dir::Neg => f.invert_u(),
        })
    }
}

impl fmt::Display for FactoredRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.c)?;
        if self.k != 0 {
            write!(f, "*u^{}", self.k)?;
        }
        for (g, m) in &self.factors {
            write!(f, "*(1+({})*u)", g.value())?;
            if *m != 1 {
                write!(f, "^{}", m)?;
            }
        }
        Ok(())
    }
}

/// Writes `p = c · u^j · Π (1 + γ u)` with every `γ` a signed power of `q`,
/// if possible.
pub fn factor_signed_q_pow(p: &Poly) -> Option<(QRat, usize, Vec<Param>)> {
    let j = p.coeffs().iter().position(|a| !a.is_zero())?;
    let c = p.coeff(j);
    let mut rest = Poly::new(p.coeffs()[j..].to_vec()).normalized_const()?;
    // a root ±q^e needs two terms of equal top q-degree, which bounds |e|
    let spread: i32 = rest
        .coeffs()
        .iter()
        .filter(|a| !a.is_zero())
        .map(|a| a.num().lo().abs() + a.num().hi().abs() + a.den().lo().abs() + a.den().hi().abs())
        .sum();
    let bound = 2 * spread + 1;
    let mut out = Vec::new();
    'exps: for e in 0..=bound {
        for exp in if e == 0 { vec![0] } else { vec![e, -e] } {
            for sign in [1, -1] {
                let g = QRat::signed_q_pow(sign, exp);
                let root = -&g.inv().unwrap();
                while rest.degree().unwrap_or(0) > 0 && rest.eval(&root).is_zero() {
                    rest = rest.divrem(&Poly::linear(g.clone())).ok()?.0;
                    out.push(Param::q_pow(sign, exp));
                }
                if rest.degree() == Some(0) {
                    break 'exps;
                }
            }
        }
    }
    (rest.degree() == Some(0)).then_some((c, j, out))
}
