use std::fmt;

use crate::{MathError, Poly, QRat};

pub const DEFAULT_CAP: usize = 8;

/// Which powers of `u` a series runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    /// `u^0, u^-1, u^-2, ...`
    Neg,
    /// `u^0, u^1, u^2, ...`
    Pos,
}

/// Truncated series in `u^-1` or `u`; `coeffs[k]` multiplies `u^(∓k)`.
#[derive(Clone)]
pub struct USeries {
    dir: Dir,
    coeffs: Vec<QRat>,
}

impl USeries {
    /// `coeffs` must be nonempty; its length fixes the cap.
    pub fn new(dir: Dir, coeffs: Vec<QRat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant coefficient");
        USeries { dir, coeffs }
    }

    pub fn zero(dir: Dir, cap: usize) -> Self {
        USeries { dir, coeffs: vec![QRat::zero(); cap + 1] }
    }

    pub fn constant(dir: Dir, c: QRat, cap: usize) -> Self {
        let mut s = Self::zero(dir, cap);
        s.coeffs[0] = c;
        s
    }

    /// Series with the given leading coefficients, zero-padded to `cap`.
    pub fn from_prefix(dir: Dir, prefix: &[QRat], cap: usize) -> Self {
        let mut s = Self::zero(dir, cap);
        for (k, c) in prefix.iter().enumerate().take(cap + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    pub fn dir(&self) -> Dir {
        self.dir
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &QRat {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, c: QRat) {
        self.coeffs[k] = c;
    }

    pub fn truncate(&self, cap: usize) -> Self {
        USeries { dir: self.dir, coeffs: self.coeffs[..=cap.min(self.cap())].to_vec() }
    }

    /// Coefficientwise comparison up to the smaller cap.
    pub fn agrees_with(&self, o: &USeries) -> bool {
        self.dir == o.dir && self.coeffs.iter().zip(&o.coeffs).all(|(a, b)| a == b)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        USeries { dir: self.dir, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, o: &USeries) -> Self {
        assert_eq!(self.dir, o.dir, "series directions differ");
        USeries { dir: self.dir, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &USeries) -> Self {
        self.add(&o.scale(&QRat::from_int(-1)))
    }

    pub fn mul(&self, o: &USeries) -> Self {
        assert_eq!(self.dir, o.dir, "series directions differ");
        let cap = self.cap().min(o.cap());
        let mut c = vec![QRat::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        USeries { dir: self.dir, coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiplicative inverse up to the cap.
    pub fn invert(&self) -> Result<Self, MathError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(MathError::NonInvertibleSeries);
        }
        let inv0 = c0.inv()?;
        let cap = self.cap();
        let mut out = vec![QRat::zero(); cap + 1];
        out[0] = inv0.clone();
        for k in 1..=cap {
            let mut acc = QRat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -(&acc * &inv0);
        }
        Ok(USeries { dir: self.dir, coeffs: out })
    }
}

impl PartialEq for USeries {
    fn eq(&self, o: &Self) -> bool {
        self.agrees_with(o)
    }
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.dir == Dir::Neg { "-" } else { "" };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "({})*u^{}{}", c, sign, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{}{})", sign, self.cap() + 1)
    }
}

impl fmt::Debug for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub fn series_invert(s: &USeries) -> Result<USeries, MathError> {
    s.invert()
}

/// Terms `(u-exponent, v-exponent, coefficient)` of `1/(q^-δ u - q^δ v)`
/// expanded in `v/u`, through `u^-cap`.
pub fn expand_kernel(delta: u8, cap: usize) -> Result<Vec<(i32, i32, QRat)>, MathError> {
    if cap < 1 {
        return Err(MathError::Domain("cap ≥ 1".into()));
    }
    if delta > 1 {
        return Err(MathError::Domain("delta must be 0 or 1".into()));
    }
    let d = delta as i32;
    Ok((1..=cap as i32).map(|k| (-k, k - 1, QRat::q_pow((2 * k - 1) * d))).collect())
}

/// Expansion of `p / r` in the given direction.
///
/// In the `Neg` direction the ratio is rewritten as
/// `u^(deg p - deg r) p~(u^-1) / r~(u^-1)` with reversed polynomials, so it
/// is defined whenever `deg p <= deg r`.
pub fn ratio_expand(p: &Poly, r: &Poly, dir: Dir, cap: usize) -> Result<USeries, MathError> {
    let dr = r.degree().ok_or(MathError::NonInvertibleSeries)?;
    let (num, den, shift) = match dir {
        Dir::Pos => (p.clone(), r.clone(), 0usize),
        Dir::Neg => {
            let dp = match p.degree() {
                None => return Ok(USeries::zero(dir, cap)),
                Some(d) => d,
            };
            if dp > dr {
                return Err(MathError::Domain("numerator degree exceeds denominator degree".into()));
            }
            (p.reversed(), r.reversed(), dr - dp)
        }
    };
    if den.coeff(0).is_zero() {
        return Err(MathError::NonInvertibleSeries);
    }
    let dinv = USeries::from_prefix(dir, den.coeffs(), cap).invert()?;
    let n = USeries::from_prefix(dir, num.coeffs(), cap);
    let q = n.mul(&dinv);
    let mut out = USeries::zero(dir, cap);
    for k in shift..=cap {
        out.coeffs[k] = q.coeffs[k - shift].clone();
    }
    Ok(out)
}

/// Result of rational reconstruction: `f = lead * num / den` with
/// `num(0) = den(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pade {
    pub num: Poly,
    pub den: Poly,
    pub lead: QRat,
}

/// Finds polynomials `Q`, `R` of degree at most `dmax` such that `Q/R`
/// expands to `f_neg` in `u^-1` and to `f_pos` in `u`.
pub fn pade_reconstruct(f_neg: &USeries, f_pos: &USeries, dmax: usize) -> Option<Pade> {
    assert_eq!(f_neg.dir(), Dir::Neg);
    assert_eq!(f_pos.dir(), Dir::Pos);
    let d = dmax;
    let nvar = 2 * (d + 1);
    // unknowns: Q_0..Q_d, then R_0..R_d
    let mut rows: Vec<Vec<QRat>> = Vec::new();
    for k in 0..=f_pos.cap() {
        let mut row = vec![QRat::zero(); nvar];
        if k <= d {
            row[k] = QRat::from_int(-1);
        }
        for j in 0..=d.min(k) {
            row[d + 1 + j] = f_pos.coeff(k - j).clone();
        }
        rows.push(row);
    }
    let capn = f_neg.cap() as i64;
    for k in (d as i64 - capn)..=d as i64 {
        let mut row = vec![QRat::zero(); nvar];
        if k >= 0 {
            row[k as usize] = QRat::from_int(-1);
        }
        for j in 0..=d as i64 {
            let m = j - k;
            if m >= 0 && m <= capn {
                row[d + 1 + j as usize] = f_neg.coeff(m as usize).clone();
            }
        }
        rows.push(row);
    }
    let ker = dense_kernel(rows, nvar);
    let v = ker.into_iter().next()?;
    let q = Poly::new(v[..=d].to_vec());
    let r = Poly::new(v[d + 1..].to_vec());
    if r.is_zero() {
        return None;
    }
    let g = q.gcd(&r);
    let q = q.divrem(&g).ok()?.0;
    let r = r.divrem(&g).ok()?.0;
    let r0 = r.coeff(0);
    let q0 = q.coeff(0);
    if r0.is_zero() || q0.is_zero() {
        return None;
    }
    let lead = &q0 / &r0;
    Some(Pade { num: q.normalized_const()?, den: r.normalized_const()?, lead })
}

/// Basis of the right null space of a dense matrix with `ncols` columns.
pub fn dense_kernel(mut rows: Vec<Vec<QRat>>, ncols: usize) -> Vec<Vec<QRat>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).filter(|&i| !rows[i][col].is_zero()).min_by_key(|&i| rows[i][col].size()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().unwrap();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![QRat::zero(); ncols];
            v[fc] = QRat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][fc].clone();
            }
            v
        })
        .collect()
}
