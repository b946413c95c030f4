use std::collections::BTreeMap;
use std::fmt;

use exactmath::QRat;
use serde::{Deserialize, Serialize};

use crate::LinalgError;

pub type SparseVec = BTreeMap<usize, QRat>;

/// Sparse matrix over Q(q) stored as row maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl Mat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat { nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].insert(i, QRat::one());
        }
        m
    }

    /// Matrix unit `E_ij` (0-indexed) of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, QRat::one());
        m
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, usize, QRat)>>(nrows: usize, ncols: usize, it: I) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (r, c, x) in it {
            m.add_to(r, c, &x);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<QRat>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_entries(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, x)| (i, j, x.clone()))),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> QRat {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, x: QRat) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if x.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, x);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &QRat) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if x.is_zero() {
            return;
        }
        let e = self.rows[i].entry(j).or_default();
        *e += x;
        if e.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QRat)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn scale(&self, c: &QRat) -> Mat {
        if c.is_zero() {
            return Mat::zeros(self.nrows, self.ncols);
        }
        Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.iter().map(|(j, x)| (*j, x * c)).collect()).collect(),
        }
    }

    pub fn map_entries(&self, f: impl Fn(&QRat) -> QRat) -> Mat {
        Mat::from_entries(self.nrows, self.ncols, self.entries().map(|(i, j, x)| (i, j, f(x))))
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.nrows, self.ncols), (o.nrows, o.ncols), "shape mismatch");
        let mut m = self.clone();
        for (i, j, x) in o.entries() {
            m.add_to(i, j, x);
        }
        m
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        self.add(&o.scale(&QRat::from_int(-1)))
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.ncols, o.nrows, "shape mismatch");
        let mut out = Mat::zeros(self.nrows, o.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (k, x) in r {
                for (j, y) in &o.rows[*k] {
                    let e = acc.entry(*j).or_default();
                    *e += x * y;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_entries(self.ncols, self.nrows, self.entries().map(|(i, j, x)| (j, i, x.clone())))
    }

    pub fn apply(&self, v: &[QRat]) -> Vec<QRat> {
        assert_eq!(v.len(), self.ncols, "shape mismatch");
        self.rows
            .iter()
            .map(|r| {
                let mut acc = QRat::zero();
                for (j, x) in r {
                    if !v[*j].is_zero() {
                        acc += x * &v[*j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Entry of largest representation size, for residual reports.
    pub fn largest_entry(&self) -> Option<(usize, usize, QRat)> {
        self.entries().max_by_key(|(_, _, x)| x.size()).map(|(i, j, x)| (i, j, x.clone()))
    }

    pub fn to_dense(&self) -> Vec<Vec<QRat>> {
        (0..self.nrows).map(|i| (0..self.ncols).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(MatJson::from(self)).unwrap()
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Mat, LinalgError> {
        let j: MatJson = serde_json::from_value(v.clone()).map_err(|e| LinalgError::Format(e.to_string()))?;
        j.try_into()
    }
}

/// Kronecker product.
pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let mut m = Mat::zeros(a.nrows * b.nrows, a.ncols * b.ncols);
    for (i, j, x) in a.entries() {
        for (k, l, y) in b.entries() {
            m.rows[i * b.nrows + k].insert(j * b.ncols + l, x * y);
        }
    }
    m
}

/// Embeds a `dim^2 x dim^2` matrix acting on legs `(a, b)` (1-based, `a < b`)
/// of `(C^dim)^{⊗nlegs}`.
pub fn place_on_legs(m: &Mat, legs: (usize, usize), nlegs: usize, dim: usize) -> Result<Mat, LinalgError> {
    let (a, b) = legs;
    if !(1 <= a && a < b && b <= nlegs) {
        return Err(LinalgError::Legs(format!("legs ({}, {}) invalid for {} legs", a, b, nlegs)));
    }
    if m.nrows != dim * dim || m.ncols != dim * dim {
        return Err(LinalgError::Shape(format!("expected {}x{} leg operator", dim * dim, dim * dim)));
    }
    let total = dim.pow(nlegs as u32);
    let digit = |x: usize, leg: usize| (x / dim.pow((nlegs - leg) as u32)) % dim;
    let with = |x: usize, leg: usize, d: usize| {
        x - digit(x, leg) * dim.pow((nlegs - leg) as u32) + d * dim.pow((nlegs - leg) as u32)
    };
    let mut out = Mat::zeros(total, total);
    for col in 0..total {
        let (ia, ib) = (digit(col, a), digit(col, b));
        let src = ia * dim + ib;
        for (r, row) in m.rows.iter().enumerate() {
            if let Some(x) = row.get(&src) {
                let row_idx = with(with(col, a, r / dim), b, r % dim);
                out.rows[row_idx].insert(col, x.clone());
            }
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct MatJson {
    nrows: usize,
    ncols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl From<&Mat> for MatJson {
    fn from(m: &Mat) -> Self {
        MatJson {
            nrows: m.nrows,
            ncols: m.ncols,
            entries: m.entries().map(|(i, j, x)| (i, j, x.to_string())).collect(),
        }
    }
}

impl TryFrom<MatJson> for Mat {
    type Error = LinalgError;
    fn try_from(j: MatJson) -> Result<Mat, LinalgError> {
        let mut m = Mat::zeros(j.nrows, j.ncols);
        for (r, c, s) in j.entries {
            if r >= j.nrows || c >= j.ncols {
                return Err(LinalgError::Format(format!("entry ({}, {}) out of range", r, c)));
            }
            let x: QRat = s.parse().map_err(|e: exactmath::MathError| LinalgError::Format(e.to_string()))?;
            m.set(r, c, x);
        }
        Ok(m)
    }
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MatJson::deserialize(d)?;
        j.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.nrows, self.ncols)?;
        for (i, j, x) in self.entries() {
            writeln!(f, "  ({}, {}) = {}", i, j, x)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identities() {
        assert_eq!(kron(&Mat::identity(2), &Mat::identity(2)), Mat::identity(4));
        let m = kron(&Mat::unit(2, 0, 0), &Mat::unit(2, 1, 1));
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), QRat::one());
        let m = kron(&Mat::identity(2), &Mat::identity(3));
        assert_eq!((m.nrows(), m.ncols()), (6, 6));
    }

    fn swap(dim: usize) -> Mat {
        let mut p = Mat::zeros(dim * dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                p.set(i * dim + j, j * dim + i, QRat::one());
            }
        }
        p
    }

    #[test]
    fn legs() {
        let r = Mat::from_entries(4, 4, (0..4).map(|i| (i, (i * 3 + 1) % 4, QRat::from_int(i as i64 + 2))));
        assert_eq!(place_on_legs(&r, (1, 2), 3, 2).unwrap(), kron(&r, &Mat::identity(2)));
        // e1⊗e2⊗e3 in (C^3)^{⊗3} is index 0*9+1*3+2
        let p = place_on_legs(&swap(3), (1, 3), 3, 3).unwrap();
        let mut v = vec![QRat::zero(); 27];
        v[5] = QRat::one();
        let w = p.apply(&v);
        assert!(w[2 * 9 + 3].is_one());
        assert!(place_on_legs(&r, (2, 2), 3, 2).is_err());
        assert!(place_on_legs(&r, (1, 4), 3, 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = Mat::from_entries(2, 3, [(0, 1, "(q^2-1)/q".parse().unwrap()), (1, 2, QRat::from_int(-3))]);
        let v = m.to_json_value();
        assert_eq!(v["entries"][0][2], "(q^2-1)/q");
        assert_eq!(Mat::from_json_value(&v).unwrap(), m);
    }
}
