use exactmath::QRat;

use crate::mat::{Mat, SparseVec};

/// Row-reduced echelon form of a sparse system.
///
/// Columns are processed in increasing index order, so callers control
/// which unknowns become pivots by numbering them first.
#[derive(Clone, Debug)]
pub struct Rref {
    pub ncols: usize,
    /// `(pivot column, row)` with the row normalized to 1 at the pivot.
    pub rows: Vec<(usize, SparseVec)>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }
}

fn axpy(dst: &mut SparseVec, f: &QRat, src: &SparseVec) {
    for (j, y) in src {
        let e = dst.entry(*j).or_default();
        *e -= &(f * y);
        if e.is_zero() {
            dst.remove(j);
        }
    }
}

/// Gauss-Jordan elimination; within each column the pivot is the entry of
/// smallest representation size.
pub fn rref(rows: Vec<SparseVec>, ncols: usize) -> Rref {
    let mut pending: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut done: Vec<(usize, SparseVec)> = Vec::new();
    loop {
        pending.retain(|r| !r.is_empty());
        let Some(col) = pending.iter().filter_map(|r| r.keys().next().copied()).min() else {
            break;
        };
        let (pidx, _) = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r.keys().next() == Some(&col))
            .min_by_key(|(_, r)| (r[&col].size(), r.len()))
            .unwrap();
        let mut prow = pending.swap_remove(pidx);
        let inv = prow[&col].inv().unwrap();
        for v in prow.values_mut() {
            *v = &*v * &inv;
        }
        for r in pending.iter_mut() {
            if let Some(f) = r.get(&col).cloned() {
                axpy(r, &f, &prow);
            }
        }
        for (_, r) in done.iter_mut() {
            if let Some(f) = r.get(&col).cloned() {
                axpy(r, &f, &prow);
            }
        }
        done.push((col, prow));
    }
    done.sort_by_key(|(c, _)| *c);
    Rref { ncols, rows: done }
}

pub fn rank(a: &Mat) -> usize {
    rref((0..a.nrows()).map(|i| a.row(i).clone()).collect(), a.ncols()).rank()
}

/// Right null space of `a`.
pub fn kernel(a: &Mat) -> VecSpace {
    let r = rref((0..a.nrows()).map(|i| a.row(i).clone()).collect(), a.ncols());
    let piv = r.pivot_cols();
    let mut out = VecSpace::new(a.ncols());
    for fc in (0..a.ncols()).filter(|c| !piv.contains(c)) {
        let mut v = vec![QRat::zero(); a.ncols()];
        v[fc] = QRat::one();
        for (pc, row) in &r.rows {
            if let Some(x) = row.get(&fc) {
                v[*pc] = -x.clone();
            }
        }
        out.insert(&v);
    }
    out
}

/// Subspace of `Q(q)^dim` kept in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct VecSpace {
    dim: usize,
    basis: Vec<Vec<QRat>>,
    pivots: Vec<usize>,
}

impl VecSpace {
    pub fn new(dim: usize) -> Self {
        VecSpace { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let mut s = Self::new(dim);
        for i in 0..dim {
            let mut v = vec![QRat::zero(); dim];
            v[i] = QRat::one();
            s.insert(&v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<QRat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[QRat]) -> Vec<QRat> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[QRat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[QRat]) -> bool {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().unwrap();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for b in self.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (x, y) in b.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, w);
        true
    }

    pub fn is_subspace_of(&self, o: &VecSpace) -> bool {
        self.basis.iter().all(|b| o.contains(b))
    }

    pub fn intersect_dim(&self, o: &VecSpace) -> usize {
        let mut s = self.clone();
        let added = o.basis.iter().filter(|b| s.insert(b)).count();
        o.dimension() - added
    }
}
