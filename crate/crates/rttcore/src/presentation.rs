use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use exactmath::{QRat, UVPoly};
use qlinalg::MatUV;

use crate::gens::{Fam, GenId, NCPoly, Word};
use crate::rmatrix::{r_const, r_const_t1, r_trig, r_trig_t1, varsigma};
use crate::rules::RuleCache;
use crate::RttError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraId {
    Uqgl,
    UqglExt,
    Uqo,
    Uqsp,
    Uqaff,
    UqaffExt,
    Yqo,
    Yqsp,
}

impl AlgebraId {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::Uqgl => "uqgl",
            AlgebraId::UqglExt => "uqgl_ext",
            AlgebraId::Uqo => "uqo",
            AlgebraId::Uqsp => "uqsp",
            AlgebraId::Uqaff => "uqaff",
            AlgebraId::UqaffExt => "uqaff_ext",
            AlgebraId::Yqo => "yqo",
            AlgebraId::Yqsp => "yqsp",
        }
    }

    pub fn is_gl_type(self) -> bool {
        matches!(self, AlgebraId::Uqgl | AlgebraId::UqglExt | AlgebraId::Uqaff | AlgebraId::UqaffExt)
    }

    pub fn is_ext(self) -> bool {
        matches!(self, AlgebraId::UqglExt | AlgebraId::UqaffExt)
    }

    /// Generators carry a level `r`.
    pub fn has_levels(self) -> bool {
        matches!(self, AlgebraId::Uqaff | AlgebraId::UqaffExt | AlgebraId::Yqo | AlgebraId::Yqsp)
    }

    pub fn is_symplectic(self) -> bool {
        matches!(self, AlgebraId::Uqsp | AlgebraId::Yqsp)
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, AlgebraId::Uqo | AlgebraId::Yqo)
    }

    /// Relations are homogeneous in the level grading.
    fn level_graded(self) -> bool {
        matches!(self, AlgebraId::Uqaff | AlgebraId::UqaffExt)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawLetters {
    pub letters: Vec<GenId>,
    pub zero: Vec<GenId>,
    pub one: Vec<GenId>,
}

/// Order on the affine generators: triples `(i,a,r)` or `(a-i,i,r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AffOrder {
    Spanning,
    Representation,
}

/// An algebra given by generators and R-matrix relations, with a PBW order.
///
/// Rewriting rules are derived lazily from the matrix relations and cached;
/// the cache never changes the result of any query.
pub struct Presentation {
    id: AlgebraId,
    n: usize,
    aff_order: AffOrder,
    pub(crate) rules: RuleCache,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation { id: self.id, n: self.n, aff_order: self.aff_order, rules: self.rules.clone() }
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({})", self)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.id {
            AlgebraId::UqglExt => "uqgl",
            AlgebraId::UqaffExt => "uqaff",
            other => other.name(),
        };
        write!(f, "{}:{}", base, self.n)?;
        if self.id.is_ext() {
            write!(f, ":ext")?;
        }
        if self.aff_order == AffOrder::Representation {
            write!(f, ":rep")?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = RttError;
    fn from_str(s: &str) -> Result<Self, RttError> {
        let bad = |m: &str| RttError::Presentation(format!("{}: {}", s, m));
        let mut parts = s.split(':');
        let base = parts.next().unwrap_or("");
        let n: usize =
            parts.next().ok_or_else(|| bad("missing size"))?.parse().map_err(|_| bad("size is not an integer"))?;
        let mut ext = false;
        let mut rep = false;
        for flag in parts {
            match flag {
                "ext" => ext = true,
                "rep" => rep = true,
                _ => return Err(bad("unknown flag")),
            }
        }
        let id = match (base, ext) {
            ("uqgl", false) => AlgebraId::Uqgl,
            ("uqgl", true) | ("uqgl_ext", _) => AlgebraId::UqglExt,
            ("uqaff", false) => AlgebraId::Uqaff,
            ("uqaff", true) | ("uqaff_ext", _) => AlgebraId::UqaffExt,
            ("uqo", false) => AlgebraId::Uqo,
            ("uqsp", false) => AlgebraId::Uqsp,
            ("yqo", false) => AlgebraId::Yqo,
            ("yqsp", false) => AlgebraId::Yqsp,
            (_, true) => return Err(bad(":ext applies only to uqgl and uqaff")),
            _ => return Err(bad("unknown algebra")),
        };
        let order = if rep { AffOrder::Representation } else { AffOrder::Spanning };
        Presentation::with_order(id, n, order)
    }
}

impl Presentation {
    pub fn new(id: AlgebraId, n: usize) -> Result<Self, RttError> {
        Self::with_order(id, n, AffOrder::Spanning)
    }

    pub fn with_order(id: AlgebraId, n: usize, aff_order: AffOrder) -> Result<Self, RttError> {
        let bad = |m: &str| Err(RttError::Presentation(format!("{}:{}: {}", id.name(), n, m)));
        if !(1..=8).contains(&n) {
            return bad("size must be between 1 and 8");
        }
        if id.is_orthogonal() && n < 2 {
            return bad("orthogonal algebras need N >= 2");
        }
        if id.is_symplectic() && n % 2 == 1 {
            return bad("symplectic algebras need even N");
        }
        if aff_order == AffOrder::Representation && !matches!(id, AlgebraId::Uqaff | AlgebraId::UqaffExt) {
            return bad(":rep applies only to uqaff");
        }
        Ok(Presentation { id, n, aff_order, rules: RuleCache::default() })
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn aff_order(&self) -> AffOrder {
        self.aff_order
    }

    fn fam_allowed(&self, f: Fam) -> bool {
        if self.id.is_gl_type() {
            matches!(f, Fam::T | Fam::TBar)
        } else {
            f == Fam::S
        }
    }

    /// Value of a generator in the extended relation system: `None` for a
    /// generator that vanishes, `Some(1)` for one equal to the identity.
    pub(crate) fn raw_value(&self, fam: Fam, i: usize, j: usize, r: u32) -> Option<NCPoly> {
        let g = GenId::new(fam, i, j, r);
        if r > 0 {
            return Some(NCPoly::gen(g));
        }
        let keep = match self.id {
            AlgebraId::Uqgl | AlgebraId::UqglExt | AlgebraId::Uqaff | AlgebraId::UqaffExt => match fam {
                Fam::T => i >= j,
                _ => i <= j,
            },
            AlgebraId::Uqo | AlgebraId::Yqo => {
                if i == j {
                    return Some(NCPoly::one());
                }
                i > j
            }
            AlgebraId::Uqsp | AlgebraId::Yqsp => i >= j || (j == i + 1 && i % 2 == 1),
        };
        keep.then(|| NCPoly::gen(g))
    }

    /// Letters of the extended relation system with level at most
    /// `max_level`, split into genuine letters, letters equal to zero and
    /// letters equal to one.
    pub fn raw_letters(&self, max_level: u32) -> RawLetters {
        let top = if self.id.has_levels() { max_level } else { 0 };
        let fams: &[Fam] = if self.id.is_gl_type() { &[Fam::T, Fam::TBar] } else { &[Fam::S] };
        let mut out = RawLetters::default();
        for &fam in fams {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    for r in 0..=top {
                        let g = GenId::new(fam, i, j, r);
                        match self.raw_value(fam, i, j, r) {
                            None => out.zero.push(g),
                            Some(p) if p.as_scalar().is_some() => out.one.push(g),
                            Some(_) => out.letters.push(g),
                        }
                    }
                }
            }
        }
        out
    }

    /// Validates a generator and returns it as a letter power of this
    /// algebra; in the non-extended algebras `t̄_ii^{(0)}` is `t_ii^{(0)}`
    /// to the power `-1`.
    pub fn gen(&self, fam: Fam, i: usize, j: usize, r: u32) -> Result<(GenId, i32), RttError> {
        let g = GenId::new(fam, i, j, r);
        let ill = |m: &str| Err(RttError::Generator(format!("{} in {}: {}", g, self, m)));
        if !self.fam_allowed(fam) {
            return ill("family not in this presentation");
        }
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return ill("index out of range");
        }
        if r > 0 && !self.id.has_levels() {
            return ill("finite algebra generators have level 0");
        }
        match self.raw_value(fam, i, j, r) {
            None => ill("generator is zero"),
            Some(p) if p.as_scalar().is_some() => ill("generator equals 1"),
            Some(_) => Ok(self.to_target(g)),
        }
    }

    /// Maps a letter of the extended relation system to this algebra.
    pub fn to_target(&self, g: GenId) -> (GenId, i32) {
        if !self.id.is_ext() && self.id.is_gl_type() && g.fam == Fam::TBar && g.i == g.j && g.r == 0 {
            (GenId::t(g.row(), g.col(), 0), -1)
        } else {
            (g, 1)
        }
    }

    /// Whether a letter of the extended relation system is invertible.
    pub(crate) fn raw_is_cartan(&self, g: GenId) -> bool {
        if g.r != 0 {
            return false;
        }
        if self.id.is_gl_type() {
            g.i == g.j
        } else if self.id.is_symplectic() {
            g.j == g.i + 1 && g.i % 2 == 1
        } else {
            false
        }
    }

    /// Invertible letters: `t_ii^{(0)}` (and `t̄_ii^{(0)}` when extended),
    /// `s_{i,i+1}^{(0)}` for odd `i` in the symplectic cases.
    pub fn is_invertible(&self, g: GenId) -> bool {
        self.raw_is_cartan(g) && self.to_target(g).1 == 1
    }

    /// Sort key realizing the PBW order.
    pub fn order_key(&self, g: GenId) -> [i64; 4] {
        let (i, a, r) = (g.i as i64, g.j as i64, g.r as i64);
        let bar = (g.fam == Fam::TBar) as i64;
        match self.id {
            AlgebraId::Uqgl | AlgebraId::UqglExt => match (g.fam, i.cmp(&a)) {
                (Fam::T, std::cmp::Ordering::Greater) => [0, -a, -i, 0],
                (Fam::T, _) => [1, i, 0, 0],
                (_, std::cmp::Ordering::Equal) => [2, i, 0, 0],
                _ => [3, i, a, 0],
            },
            AlgebraId::Uqaff | AlgebraId::UqaffExt => match self.aff_order {
                AffOrder::Spanning => [i, a, r, bar],
                AffOrder::Representation => [a - i, i, r, bar],
            },
            AlgebraId::Uqo | AlgebraId::Yqo => [i, a, r, 0],
            AlgebraId::Uqsp | AlgebraId::Yqsp => {
                let (si, sa) = (varsigma(g.row()), varsigma(g.col()));
                [si + sa, si, r, 0]
            }
        }
    }

    /// Additive grading preserved by every relation (weight, plus the
    /// spectral degree for the affine algebras).
    pub(crate) fn grade(&self, w: &Word) -> Vec<i64> {
        if self.id.is_orthogonal() {
            return Vec::new();
        }
        let dim = if self.id.is_symplectic() { self.n / 2 } else { self.n } + self.id.level_graded() as usize;
        let mut v = vec![0i64; dim];
        for &(g, p) in w.factors() {
            let p = p as i64;
            if self.id.is_symplectic() {
                for x in [g.row(), g.col()] {
                    let k = (x - 1) / 2;
                    v[k] += if x % 2 == 1 { p } else { -p };
                }
            } else {
                v[g.row() - 1] += p;
                v[g.col() - 1] -= p;
                if self.id.level_graded() {
                    let d = g.r as i64 * p;
                    v[self.n] += if g.fam == Fam::T { d } else { -d };
                }
            }
        }
        v
    }

    /// Letters of this algebra with level at most `max_level`, in PBW order.
    pub fn letters(&self, max_level: u32) -> Vec<GenId> {
        let top = if self.id.has_levels() { max_level } else { 0 };
        let fams: &[Fam] = if self.id.is_gl_type() { &[Fam::T, Fam::TBar] } else { &[Fam::S] };
        let mut out = Vec::new();
        for &fam in fams {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    for r in 0..=top {
                        if let Ok((g, 1)) = self.gen(fam, i, j, r) {
                            out.push(g);
                        }
                    }
                }
            }
        }
        out.sort_by_key(|g| self.order_key(*g));
        out
    }

    /// Validates every letter of `x` and rewrites it in this algebra's letters.
    pub fn canonicalize(&self, x: &NCPoly) -> Result<NCPoly, RttError> {
        let mut bad = None;
        let out = x.substitute(&mut |g, p| match self.gen(g.fam, g.row(), g.col(), g.r) {
            Ok((h, s)) => {
                if p < 0 && !self.raw_is_cartan(g) {
                    bad = Some(RttError::Generator(format!("{} is not invertible in {}", g, self)));
                }
                NCPoly::word(Word::letter(h, s * p))
            }
            Err(e) => {
                bad = Some(e);
                NCPoly::zero()
            }
        });
        match bad {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<NCPoly, RttError> {
        self.canonicalize(&crate::parse::parse_element(s)?)
    }

    /// A word is ordered if its letters strictly increase.
    pub fn is_ordered(&self, w: &Word) -> bool {
        w.factors().windows(2).all(|p| self.order_key(p[0].0) < self.order_key(p[1].0))
    }

    /// Coefficients of the defining matrix relations, in the letters of the
    /// extended system, with generator series truncated at level `trunc`.
    pub fn relation_instances(&self, trunc: u32) -> Vec<NCPoly> {
        let n = self.n;
        let top = if self.id.has_levels() { trunc } else { 0 };
        let series = |fam: Fam| -> OpSeries {
            let mut m = BTreeMap::new();
            for i in 1..=n {
                for j in 1..=n {
                    let mut s = BTreeMap::new();
                    for r in 0..=top {
                        if let Some(v) = self.raw_value(fam, i, j, r) {
                            let e = if fam == Fam::TBar { r as i32 } else { -(r as i32) };
                            s.insert(e, v);
                        }
                    }
                    m.insert((i, j), s);
                }
            }
            OpSeries(m)
        };
        let mut out = Vec::new();
        if self.id.is_gl_type() {
            let r = if self.id.has_levels() {
                r_trig(n)
            } else {
                MatUV::from_mat(&r_const(n), &UVPoly::constant(QRat::one()))
            };
            let rr = OpMat::scalar(&r);
            let t = series(Fam::T);
            let tb = series(Fam::TBar);
            let mut pairs = vec![(&t, &t), (&tb, &tb), (&tb, &t)];
            // equivalent to the previous one only in the spectral setting
            if self.id.has_levels() {
                pairs.push((&t, &tb));
            }
            for (x, y) in pairs {
                let x1 = OpMat::leg(x, 1, n);
                let y2 = OpMat::leg(y, 2, n);
                let lhs = rr.mul(&x1).mul(&y2);
                let rhs = y2.mul(&x1).mul(&rr);
                out.extend(lhs.sub(&rhs).instances());
            }
        } else {
            let (r, rt) = if self.id.has_levels() {
                let rt = r_trig_t1(n);
                let mut shifted = MatUV::zeros(n * n, n * n);
                for (&(a, b), p) in rt.entries() {
                    let mut q = UVPoly::zero();
                    for (&(du, dv), c) in p.terms() {
                        q = &q + &UVPoly::monomial(c.clone(), 1 - du, dv);
                    }
                    shifted.add_to(a, b, &q);
                }
                (r_trig(n), shifted)
            } else {
                let one = UVPoly::constant(QRat::one());
                (MatUV::from_mat(&r_const(n), &one), MatUV::from_mat(&r_const_t1(n), &one))
            };
            let (rr, rt) = (OpMat::scalar(&r), OpMat::scalar(&rt));
            let s = series(Fam::S);
            let s1 = OpMat::leg(&s, 1, n);
            let s2 = OpMat::leg(&s, 2, n);
            let lhs = rr.mul(&s1).mul(&rt).mul(&s2);
            let rhs = s2.mul(&rt).mul(&s1).mul(&rr);
            out.extend(lhs.sub(&rhs).instances());
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|p| seen.insert(p.clone()));
        out
    }
}

/// Matrix of generator series: `(i,j) -> {exponent of the spectral parameter -> value}`.
struct OpSeries(BTreeMap<(usize, usize), BTreeMap<i32, NCPoly>>);

type Ser = BTreeMap<(i32, i32), NCPoly>;

/// `N^2 x N^2` operator matrix with entries that are Laurent polynomials in
/// `u`, `v` over the free algebra.
struct OpMat {
    e: BTreeMap<(usize, usize), Ser>,
}

fn ser_add(dst: &mut Ser, k: (i32, i32), p: &NCPoly) {
    let e = dst.entry(k).or_default();
    *e = &*e + p;
    if e.is_zero() {
        dst.remove(&k);
    }
}

impl OpMat {
    fn scalar(m: &MatUV) -> OpMat {
        let mut e = BTreeMap::new();
        for (&(i, j), p) in m.entries() {
            let s: Ser = p.terms().map(|(&k, c)| (k, NCPoly::scalar(c.clone()))).collect();
            e.insert((i, j), s);
        }
        OpMat { e }
    }

    /// `X ⊗ 1` (leg 1, parameter `u`) or `1 ⊗ X` (leg 2, parameter `v`).
    fn leg(x: &OpSeries, leg: usize, n: usize) -> OpMat {
        let mut e = BTreeMap::new();
        for (&(i, j), s) in &x.0 {
            if s.is_empty() {
                continue;
            }
            let ser: Ser = s.iter().map(|(&k, p)| (if leg == 1 { (k, 0) } else { (0, k) }, p.clone())).collect();
            for k in 1..=n {
                let (row, col) = if leg == 1 {
                    ((i - 1) * n + (k - 1), (j - 1) * n + (k - 1))
                } else {
                    ((k - 1) * n + (i - 1), (k - 1) * n + (j - 1))
                };
                e.insert((row, col), ser.clone());
            }
        }
        OpMat { e }
    }

    fn mul(&self, o: &OpMat) -> OpMat {
        let mut by_row: BTreeMap<usize, Vec<(usize, &Ser)>> = BTreeMap::new();
        for ((k, j), y) in &o.e {
            by_row.entry(*k).or_default().push((*j, y));
        }
        let mut e: BTreeMap<(usize, usize), Ser> = BTreeMap::new();
        for ((i, k), x) in &self.e {
            let Some(row) = by_row.get(k) else { continue };
            for (j, y) in row {
                let dst = e.entry((*i, *j)).or_default();
                for (&(a, b), p) in x {
                    for (&(c, d), r) in *y {
                        ser_add(dst, (a + c, b + d), &(p * r));
                    }
                }
            }
        }
        e.retain(|_, s| !s.is_empty());
        OpMat { e }
    }

    fn sub(&self, o: &OpMat) -> OpMat {
        let mut e = self.e.clone();
        for (k, s) in &o.e {
            let dst = e.entry(*k).or_default();
            for (kk, p) in s {
                ser_add(dst, *kk, &-p);
            }
        }
        e.retain(|_, s| !s.is_empty());
        OpMat { e }
    }

    fn instances(&self) -> Vec<NCPoly> {
        self.e.values().flat_map(|s| s.values().cloned()).collect()
    }
}
