use std::collections::{BTreeMap, BTreeSet};

use exactmath::QRat;
use qlinalg::Mat;
use rttcore::{AlgebraId, Fam, GenId, Presentation, Word};
use serde_json::{json, Map, Value};

use crate::RepError;

/// A finite-dimensional module given by one exact matrix per generator.
///
/// Actions are keyed by the letters of the extended relation system: in the
/// non-extended `gl` algebras `t̄_ii^{(0)}` carries its own matrix, and for
/// `yqsp` the matrices of `s̄_ij^{(r)}` are stored next to those of `s_ij^{(r)}`.
/// Generators that vanish identically act by zero, those equal to one by the
/// identity.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    presentation: Presentation,
    dim: usize,
    cap: u32,
    actions: BTreeMap<GenId, Mat>,
    zero: BTreeSet<GenId>,
    one: BTreeSet<GenId>,
    weights: Vec<Vec<QRat>>,
    highest_index: Option<usize>,
}

/// Letters that carry a matrix in a module over `p` with level cap `cap`.
pub(crate) fn stored_letters(p: &Presentation, cap: u32) -> Vec<GenId> {
    let mut out = p.raw_letters(cap).letters;
    if p.id() == AlgebraId::Yqsp {
        for i in 1..=p.n() {
            for j in 1..=p.n() {
                for r in 0..=cap {
                    out.push(GenId::sb(i, j, r));
                }
            }
        }
    }
    out
}

/// Generators whose matrices give the weight of a basis vector.
fn weight_letters(p: &Presentation) -> Vec<GenId> {
    if p.id().is_gl_type() {
        (1..=p.n()).map(|i| GenId::t(i, i, 0)).collect()
    } else if p.id().is_symplectic() {
        (1..=p.n() / 2).map(|i| GenId::s(2 * i - 1, 2 * i, 0)).collect()
    } else {
        Vec::new()
    }
}

impl ModuleRep {
    /// Checks that `actions` holds exactly one square `dim x dim` matrix per
    /// generator of level at most `cap` (the cap is 0 for finite algebras).
    pub fn new(
        presentation: Presentation,
        dim: usize,
        cap: u32,
        actions: BTreeMap<GenId, Mat>,
        highest_index: Option<usize>,
    ) -> Result<Self, RepError> {
        let cap = if presentation.id().has_levels() { cap } else { 0 };
        if dim == 0 {
            return Err(RepError::Invalid("module dimension must be positive".into()));
        }
        let want: BTreeSet<GenId> = stored_letters(&presentation, cap).into_iter().collect();
        let have: BTreeSet<GenId> = actions.keys().copied().collect();
        if let Some(g) = want.difference(&have).next() {
            return Err(RepError::Invalid(format!("missing action of {}", g)));
        }
        if let Some(g) = have.difference(&want).next() {
            return Err(RepError::Invalid(format!("{} is not a generator of {} up to level {}", g, presentation, cap)));
        }
        if let Some((g, _)) = actions.iter().find(|(_, m)| m.nrows() != dim || m.ncols() != dim) {
            return Err(RepError::Invalid(format!("action of {} is not {} x {}", g, dim, dim)));
        }
        if highest_index.is_some_and(|h| h >= dim) {
            return Err(RepError::Invalid("highest index out of range".into()));
        }
        let raw = presentation.raw_letters(cap);
        let mut m = ModuleRep {
            presentation,
            dim,
            cap,
            actions,
            zero: raw.zero.into_iter().collect(),
            one: raw.one.into_iter().collect(),
            weights: Vec::new(),
            highest_index,
        };
        m.weights = m.diagonal_weights();
        Ok(m)
    }

    fn diagonal_weights(&self) -> Vec<Vec<QRat>> {
        let mats: Vec<&Mat> = weight_letters(&self.presentation).iter().filter_map(|g| self.actions.get(g)).collect();
        if mats.is_empty() || mats.iter().any(|m| m.entries().any(|(i, j, _)| i != j)) {
            return Vec::new();
        }
        (0..self.dim).map(|k| mats.iter().map(|m| m.get(k, k)).collect()).collect()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Eigenvalues of the Cartan generators on each basis vector; empty
    /// when those generators are not diagonal in the basis.
    pub fn weights(&self) -> &[Vec<QRat>] {
        &self.weights
    }

    pub fn highest_index(&self) -> Option<usize> {
        self.highest_index
    }

    /// The stored matrices.
    pub fn actions(&self) -> &BTreeMap<GenId, Mat> {
        &self.actions
    }

    /// Matrix of any generator of level at most the cap, including the
    /// ones that vanish or equal one.
    pub fn action(&self, g: GenId) -> Result<Mat, RepError> {
        if let Some(m) = self.actions.get(&g) {
            Ok(m.clone())
        } else if self.zero.contains(&g) {
            Ok(Mat::zeros(self.dim, self.dim))
        } else if self.one.contains(&g) {
            Ok(Mat::identity(self.dim))
        } else {
            Err(RepError::Invalid(format!(
                "{} has no action in a {} module with cap {}",
                g, self.presentation, self.cap
            )))
        }
    }

    /// Matrix of a word in the letters of the presentation itself (so
    /// `t_ii^{(0)}` may carry a negative power in the non-extended algebras).
    pub fn word_action(&self, w: &Word) -> Result<Mat, RepError> {
        let mut acc = Mat::identity(self.dim);
        for &(g, p) in w.factors() {
            let m = if p >= 0 {
                self.action(g)?
            } else if let Some(inv) = self.inverse_letter(g) {
                self.action(inv)?
            } else {
                return Err(RepError::Invalid(format!("{} is not invertible", g)));
            };
            for _ in 0..p.unsigned_abs() {
                acc = acc.mul(&m);
            }
        }
        Ok(acc)
    }

    /// Letter whose matrix is the inverse of the matrix of `g`, if stored.
    fn inverse_letter(&self, g: GenId) -> Option<GenId> {
        let id = self.presentation.id();
        (id.is_gl_type() && !id.is_ext() && g.fam == Fam::T && g.i == g.j && g.r == 0)
            .then(|| GenId::tb(g.row(), g.col(), 0))
    }

    /// Same module with one matrix replaced.
    pub fn with_action(&self, g: GenId, m: Mat) -> Result<Self, RepError> {
        if !self.actions.contains_key(&g) {
            return Err(RepError::Invalid(format!("{} is not stored", g)));
        }
        let mut actions = self.actions.clone();
        actions.insert(g, m);
        ModuleRep::new(self.presentation.clone(), self.dim, self.cap, actions, self.highest_index)
    }

    pub fn to_json(&self) -> Value {
        let actions: Map<String, Value> =
            self.actions.iter().map(|(g, m)| (g.to_string(), m.to_json_value())).collect();
        let weights: Vec<Vec<String>> =
            self.weights.iter().map(|w| w.iter().map(|x| x.to_string()).collect()).collect();
        json!({
            "presentation": self.presentation.to_string(),
            "dim": self.dim,
            "cap": self.cap,
            "actions": actions,
            "weights": weights,
            "highest_index": self.highest_index,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, RepError> {
        let bad = |m: &str| RepError::Json(m.into());
        let p: Presentation = v["presentation"].as_str().ok_or_else(|| bad("missing presentation"))?.parse()?;
        let dim = v["dim"].as_u64().ok_or_else(|| bad("missing dim"))? as usize;
        let cap = v["cap"].as_u64().ok_or_else(|| bad("missing cap"))? as u32;
        let highest_index = match &v["highest_index"] {
            Value::Null => None,
            x => Some(x.as_u64().ok_or_else(|| bad("highest_index must be an integer"))? as usize),
        };
        let mut actions = BTreeMap::new();
        for (k, m) in v["actions"].as_object().ok_or_else(|| bad("missing actions"))? {
            let g = parse_gen(k)?;
            let m = Mat::from_json_value(m).map_err(|e| RepError::Json(format!("{}: {}", k, e)))?;
            actions.insert(g, m);
        }
        ModuleRep::new(p, dim, cap, actions, highest_index)
    }
}

fn parse_gen(s: &str) -> Result<GenId, RepError> {
    let x = rttcore::parse_element(s)?;
    let mut it = x.terms();
    match (it.next(), it.next()) {
        (Some((w, c)), None) if c.is_one() => match w.factors() {
            [(g, 1)] => Ok(*g),
            _ => Err(RepError::Json(format!("{} is not a single generator", s))),
        },
        _ => Err(RepError::Json(format!("{} is not a single generator", s))),
    }
}
