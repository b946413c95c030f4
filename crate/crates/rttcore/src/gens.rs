use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use exactmath::{BigInt, QRat};

/// Generator family: `t`, `t̄`, `s`, `s̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fam {
    T,
    TBar,
    S,
    SBar,
}

impl Fam {
    pub fn prefix(self) -> &'static str {
        match self {
            Fam::T => "t",
            Fam::TBar => "tb",
            Fam::S => "s",
            Fam::SBar => "sb",
        }
    }

    pub fn from_prefix(s: &str) -> Option<Fam> {
        match s {
            "t" => Some(Fam::T),
            "tb" => Some(Fam::TBar),
            "s" => Some(Fam::S),
            "sb" => Some(Fam::SBar),
            _ => None,
        }
    }
}

/// Generator `x_ij^{(r)}` with 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId {
    pub fam: Fam,
    pub i: u8,
    pub j: u8,
    pub r: u32,
}

impl GenId {
    pub fn new(fam: Fam, i: usize, j: usize, r: u32) -> Self {
        GenId { fam, i: i as u8, j: j as u8, r }
    }

    pub fn t(i: usize, j: usize, r: u32) -> Self {
        Self::new(Fam::T, i, j, r)
    }

    pub fn tb(i: usize, j: usize, r: u32) -> Self {
        Self::new(Fam::TBar, i, j, r)
    }

    pub fn s(i: usize, j: usize, r: u32) -> Self {
        Self::new(Fam::S, i, j, r)
    }

    pub fn sb(i: usize, j: usize, r: u32) -> Self {
        Self::new(Fam::SBar, i, j, r)
    }

    pub fn row(&self) -> usize {
        self.i as usize
    }

    pub fn col(&self) -> usize {
        self.j as usize
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{};{}]", self.fam.prefix(), self.i, self.j, self.r)
    }
}

/// Product of generator powers; adjacent equal generators are merged and
/// zero powers dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<(GenId, i32)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GenId, p: i32) -> Self {
        let mut w = Word::empty();
        w.push(g, p);
        w
    }

    pub fn from_factors<I: IntoIterator<Item = (GenId, i32)>>(it: I) -> Self {
        let mut w = Word::empty();
        for (g, p) in it {
            w.push(g, p);
        }
        w
    }

    pub fn factors(&self) -> &[(GenId, i32)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn len(&self) -> usize {
        self.0.iter().map(|(_, p)| p.unsigned_abs() as usize).sum()
    }

    /// Sum of levels, with multiplicity.
    pub fn total_level(&self) -> u32 {
        self.0.iter().map(|(g, p)| g.r * p.unsigned_abs()).sum()
    }

    pub fn max_level(&self) -> u32 {
        self.0.iter().map(|(g, _)| g.r).max().unwrap_or(0)
    }

    pub fn push(&mut self, g: GenId, p: i32) {
        if p == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == g {
                last.1 += p;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((g, p));
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut w = self.clone();
        for &(g, p) in &o.0 {
            w.push(g, p);
        }
        w
    }

    pub fn slice(&self, a: usize, b: usize) -> Word {
        Word(self.0[a..b].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, p)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", g)?;
            if *p != 1 {
                write!(f, "^{}", p)?;
            }
        }
        Ok(())
    }
}

/// Finite linear combination of words with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Word, QRat>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::scalar(QRat::one())
    }

    pub fn scalar(c: QRat) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: QRat) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, QRat::one())
    }

    pub fn gen(g: GenId) -> Self {
        Self::word(Word::letter(g, 1))
    }

    pub fn add_term(&mut self, w: Word, c: QRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, c: &QRat) {
        for (w, x) in &o.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QRat)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, QRat> {
        self.terms
    }

    pub fn from_terms(terms: BTreeMap<Word, QRat>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn coeff(&self, w: &Word) -> QRat {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// The scalar value if the polynomial has no nonempty words.
    pub fn as_scalar(&self) -> Option<QRat> {
        match self.terms.len() {
            0 => Some(QRat::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &QRat) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_scaled(self, c);
        p
    }

    /// Applies a letter substitution; each letter maps to a polynomial.
    pub fn substitute(&self, f: &mut impl FnMut(GenId, i32) -> NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::scalar(c.clone());
            for &(g, p) in w.factors() {
                acc = &acc * &f(g, p);
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        out
    }

    pub fn max_level(&self) -> u32 {
        self.terms.keys().map(|w| w.max_level()).max().unwrap_or(0)
    }
}

fn int_value(c: &QRat) -> Option<BigInt> {
    let (r, e) = c.as_monomial()?;
    (e == 0 && r.is_integer()).then(|| r.to_integer())
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let s = match (w.is_empty(), int_value(c)) {
                (true, Some(n)) => n.to_string(),
                (true, None) => format!("({})", c),
                (false, Some(n)) if n == 1.into() => w.to_string(),
                (false, Some(n)) if n == (-1).into() => format!("-{}", w),
                (false, Some(n)) => format!("{}*{}", n, w),
                (false, None) => format!("({})*{}", c, w),
            };
            match (k, s.strip_prefix('-')) {
                (0, _) => write!(f, "{}", s)?,
                (_, Some(rest)) => write!(f, " - {}", rest)?,
                (_, None) => write!(f, " + {}", s)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, o: &NCPoly) -> NCPoly {
        let (mut big, small) = if self.terms.len() >= o.terms.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (w, c) in &small.terms {
            big.add_term(w.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, o: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), -c);
        }
        p
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, o: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                p.add_term(a.concat(b), x * y);
            }
        }
        p
    }
}
