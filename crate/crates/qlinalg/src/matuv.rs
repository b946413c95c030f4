use std::collections::BTreeMap;

use exactmath::{QRat, UVPoly};

use crate::mat::Mat;

/// Sparse matrix with entries polynomial in the spectral parameters `u`, `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatUV {
    nrows: usize,
    ncols: usize,
    entries: BTreeMap<(usize, usize), UVPoly>,
}

impl MatUV {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        MatUV { nrows, ncols, entries: BTreeMap::new() }
    }

    /// Constant matrix scaled by a polynomial.
    pub fn from_mat(m: &Mat, f: &UVPoly) -> Self {
        let mut out = Self::zeros(m.nrows(), m.ncols());
        for (i, j, x) in m.entries() {
            out.add_to(i, j, &f.scale(x));
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> UVPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &UVPoly)> {
        self.entries.iter()
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &UVPoly) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        let e = self.entries.entry((i, j)).or_default();
        *e = &*e + x;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, o: &MatUV) -> MatUV {
        let mut m = self.clone();
        for ((i, j), x) in &o.entries {
            m.add_to(*i, *j, x);
        }
        m
    }

    pub fn sub(&self, o: &MatUV) -> MatUV {
        self.add(&o.scale(&QRat::from_int(-1)))
    }

    pub fn scale(&self, c: &QRat) -> MatUV {
        let mut m = Self::zeros(self.nrows, self.ncols);
        for ((i, j), x) in &self.entries {
            m.add_to(*i, *j, &x.scale(c));
        }
        m
    }

    pub fn mul(&self, o: &MatUV) -> MatUV {
        assert_eq!(self.ncols, o.nrows, "shape mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &UVPoly)>> = BTreeMap::new();
        for ((k, j), y) in &o.entries {
            by_row.entry(*k).or_default().push((*j, y));
        }
        let mut m = Self::zeros(self.nrows, o.ncols);
        for ((i, k), x) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (j, y) in row {
                    m.add_to(*i, *j, &(x * y));
                }
            }
        }
        m
    }

    pub fn map(&self, f: impl Fn(&UVPoly) -> UVPoly) -> MatUV {
        let mut m = Self::zeros(self.nrows, self.ncols);
        for ((i, j), x) in &self.entries {
            m.add_to(*i, *j, &f(x));
        }
        m
    }

    /// Specializes `u`, `v` to field elements.
    pub fn eval(&self, u: &QRat, v: &QRat) -> Mat {
        Mat::from_entries(self.nrows, self.ncols, self.entries.iter().map(|((i, j), x)| (*i, *j, x.eval(u, v))))
    }
}
