use exactmath::QRat;

use crate::elim::VecSpace;
use crate::mat::Mat;

fn flatten(m: &Mat) -> Vec<QRat> {
    let n = m.ncols();
    let mut v = vec![QRat::zero(); m.nrows() * n];
    for (i, j, x) in m.entries() {
        v[i * n + j] = x.clone();
    }
    v
}

fn unflatten(v: &[QRat], n: usize) -> Mat {
    Mat::from_entries(n, n, v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k / n, k % n, x.clone())))
}

/// Dimension of the unital algebra generated by `mats` inside `n x n`
/// matrices over Q(q).
pub fn envelope_dimension(mats: &[Mat], n: usize) -> usize {
    assert!(mats.iter().all(|m| m.nrows() == n && m.ncols() == n), "all matrices must be n x n");
    let mut span = VecSpace::new(n * n);
    let mut queue = vec![Mat::identity(n)];
    span.insert(&flatten(&queue[0]));
    while let Some(b) = queue.pop() {
        for g in mats {
            if span.dimension() == n * n {
                return n * n;
            }
            let p = g.mul(&b);
            let v = flatten(&p);
            if span.insert(&v) {
                queue.push(unflatten(&v, n));
            }
        }
    }
    span.dimension()
}

/// Mersenne prime used for specialized rank computations.
pub const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn inv(a: u64) -> u64 {
    let mut acc = 1u64;
    let mut b = a;
    let mut e = PRIME - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

/// Dense matrix over `Z/PRIME`.
#[derive(Clone, Debug, PartialEq)]
pub struct FpMat {
    pub n: usize,
    pub data: Vec<u64>,
}

impl FpMat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        FpMat { n, data }
    }

    /// Specializes `q -> q0`; `None` at a pole.
    pub fn specialize(m: &Mat, q0: u64) -> Option<Self> {
        let n = m.nrows();
        let mut data = vec![0; n * n];
        for (i, j, x) in m.entries() {
            data[i * n + j] = x.eval_mod(PRIME, q0)?;
        }
        Some(FpMat { n, data })
    }

    pub fn mul(&self, o: &FpMat) -> FpMat {
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = o.data[k * n + j];
                    if b != 0 {
                        out[i * n + j] = (out[i * n + j] + mulmod(a, b)) % PRIME;
                    }
                }
            }
        }
        FpMat { n, data: out }
    }
}

/// Echelon basis over `Z/PRIME`.
#[derive(Clone, Debug, Default)]
pub struct FpSpace {
    basis: Vec<(usize, Vec<u64>)>,
}

impl FpSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        for (p, b) in &self.basis {
            let f = w[*p];
            if f == 0 {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if *y != 0 {
                    *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
                }
            }
        }
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let iv = inv(w[p]);
        for x in w.iter_mut() {
            *x = mulmod(*x, iv);
        }
        self.basis.push((p, w));
        true
    }
}

/// Envelope dimension after specializing `q` to `q0` modulo [`PRIME`].
///
/// Specialization can only lower the dimension, so a value of `n^2` here
/// certifies `n^2` over Q(q). Returns `None` if some entry has a pole.
pub fn envelope_dimension_specialized(mats: &[Mat], n: usize, q0: u64) -> Option<usize> {
    let gens: Vec<FpMat> = mats.iter().map(|m| FpMat::specialize(m, q0)).collect::<Option<_>>()?;
    let mut span = FpSpace::default();
    let id = FpMat::identity(n);
    span.insert(&id.data);
    let mut queue = vec![id];
    while let Some(b) = queue.pop() {
        for g in &gens {
            if span.dimension() == n * n {
                return Some(n * n);
            }
            let p = g.mul(&b);
            if span.insert(&p.data) {
                queue.push(p);
            }
        }
    }
    Some(span.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_examples() {
        assert_eq!(envelope_dimension(&[Mat::identity(2)], 2), 1);
        assert_eq!(envelope_dimension(&[Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)], 2), 4);
        assert_eq!(envelope_dimension(&[Mat::unit(2, 0, 0)], 2), 2);
    }

    #[test]
    fn specialized_agrees_on_examples() {
        let q0 = 1_234_567;
        assert_eq!(envelope_dimension_specialized(&[Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)], 2, q0), Some(4));
        assert_eq!(envelope_dimension_specialized(&[Mat::unit(2, 0, 0)], 2, q0), Some(2));
        let mut m = Mat::zeros(2, 2);
        m.set(0, 1, "1/(q-2)".parse().unwrap());
        assert_eq!(envelope_dimension_specialized(&[m], 2, 2), None);
    }
}
