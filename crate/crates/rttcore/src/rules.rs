//! Rewriting rules derived from the matrix relations.
//!
//! For a block of relation coefficients (fixed grade, words of total level at
//! most `T`) the out-of-order products are eliminated first, so each reduced
//! row expresses one out-of-order product through ordered words only.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Mutex;

use exactmath::QRat;
use qlinalg::{rref, SparseVec};

use crate::gens::{GenId, NCPoly, Word};
use crate::presentation::Presentation;
use crate::RttError;

/// Extra truncation depth so that no relation coefficient with all visible
/// words inside a block loses a term to the truncation.
const TRUNC_MARGIN: u32 = 4;

#[derive(Clone, Default)]
struct RuleState {
    inst_trunc: Option<u32>,
    instances: Vec<NCPoly>,
    done: HashSet<(u32, Vec<i64>)>,
    pair: HashMap<(GenId, GenId), NCPoly>,
    lambda: HashMap<(GenId, GenId), QRat>,
    target_pair: HashMap<(GenId, GenId), NCPoly>,
}

#[derive(Default)]
pub(crate) struct RuleCache(Mutex<RuleState>);

impl Clone for RuleCache {
    fn clone(&self) -> Self {
        RuleCache(Mutex::new(self.0.lock().unwrap().clone()))
    }
}

impl RuleCache {
    fn ensure_block(&self, p: &Presentation, st: &mut RuleState, total: u32, grade: Vec<i64>) -> Result<(), RttError> {
        let total = if p.id().has_levels() { total } else { 0 };
        if st.done.contains(&(total, grade.clone())) {
            return Ok(());
        }
        let need = total + TRUNC_MARGIN;
        if st.inst_trunc.is_none_or(|t| t < need) {
            let t =
                if p.id().has_levels() { need.max(st.inst_trunc.unwrap_or(0) * 2).max(TRUNC_MARGIN + 2) } else { 0 };
            st.instances = p.relation_instances(t);
            st.inst_trunc = Some(if p.id().has_levels() { t } else { u32::MAX });
        }
        let block: Vec<NCPoly> = st
            .instances
            .iter()
            .filter(|inst| {
                inst.terms().all(|(w, _)| w.total_level() <= total)
                    && inst.terms().next().is_some_and(|(w, _)| p.grade(w) == grade)
            })
            .cloned()
            .collect();
        derive_block(p, st, &block, total)?;
        st.done.insert((total, grade));
        Ok(())
    }

    /// Rule for an out-of-order pair of letters of the extended system.
    fn raw_rule(&self, p: &Presentation, x: GenId, y: GenId) -> Result<NCPoly, RttError> {
        let mut st = self.0.lock().unwrap();
        if let Some(r) = st.pair.get(&(x, y)) {
            return Ok(r.clone());
        }
        let w = Word::from_factors([(x, 1), (y, 1)]);
        self.ensure_block(p, &mut st, w.total_level(), p.grade(&w))?;
        st.pair
            .get(&(x, y))
            .cloned()
            .ok_or_else(|| RttError::Internal(format!("no rewriting rule for {}*{} in {}", x, y, p)))
    }

    /// Rule for an out-of-order pair of letters of the presentation itself.
    pub(crate) fn target_rule(&self, p: &Presentation, x: GenId, y: GenId) -> Result<NCPoly, RttError> {
        if let Some(r) = self.0.lock().unwrap().target_pair.get(&(x, y)) {
            return Ok(r.clone());
        }
        let raw = self.raw_rule(p, x, y)?;
        let mapped = raw.substitute(&mut |g, e| {
            let (h, s) = p.to_target(g);
            NCPoly::word(Word::letter(h, s * e))
        });
        self.0.lock().unwrap().target_pair.insert((x, y), mapped.clone());
        Ok(mapped)
    }

    /// `λ` with `c x = λ x c` for an invertible letter `c`.
    pub(crate) fn lambda(&self, p: &Presentation, c: GenId, x: GenId) -> Result<QRat, RttError> {
        let mut st = self.0.lock().unwrap();
        if let Some(l) = st.lambda.get(&(c, x)) {
            return Ok(l.clone());
        }
        let w = Word::from_factors([(c, 1), (x, 1)]);
        self.ensure_block(p, &mut st, w.total_level(), p.grade(&w))?;
        st.lambda
            .get(&(c, x))
            .cloned()
            .ok_or_else(|| RttError::Internal(format!("no commutation factor for {} and {} in {}", c, x, p)))
    }
}

fn is_out_of_order(p: &Presentation, w: &Word) -> bool {
    let f = w.factors();
    f.len() == 2 && p.order_key(f[0].0) > p.order_key(f[1].0)
}

fn derive_block(p: &Presentation, st: &mut RuleState, block: &[NCPoly], total: u32) -> Result<(), RttError> {
    let words: BTreeSet<Word> = block.iter().flat_map(|i| i.terms().map(|(w, _)| w.clone())).collect();
    let (bad, good): (Vec<Word>, Vec<Word>) = words.into_iter().partition(|w| is_out_of_order(p, w));
    let nbad = bad.len();
    let cols: Vec<Word> = bad.into_iter().chain(good).collect();
    let index: HashMap<&Word, usize> = cols.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let rows: Vec<SparseVec> =
        block.iter().map(|inst| inst.terms().map(|(w, c)| (index[w], c.clone())).collect()).collect();
    let red = rref(rows, cols.len());
    for (pc, row) in &red.rows {
        if *pc >= nbad || row.keys().any(|&c| c != *pc && c < nbad) {
            continue;
        }
        let f = cols[*pc].factors();
        let (x, y) = (f[0].0, f[1].0);
        // lower-level pairs take their rules from their own block
        if st.pair.contains_key(&(x, y)) || cols[*pc].total_level() != total {
            continue;
        }
        let mut rhs = NCPoly::zero();
        for (&c, v) in row {
            if c != *pc {
                rhs.add_term(cols[c].clone(), -v);
            }
        }
        let (cx, cy) = (p.raw_is_cartan(x), p.raw_is_cartan(y));
        if cx || cy {
            let swapped = Word::from_factors([(y, 1), (x, 1)]);
            let mu = match rhs.as_single(&swapped) {
                Some(mu) => mu,
                None => {
                    return Err(RttError::Internal(format!(
                        "{}*{} is not a scalar multiple of {} in {}",
                        x, y, swapped, p
                    )));
                }
            };
            let inv = mu.inv().map_err(|_| RttError::Internal("zero commutation factor".into()))?;
            if cx {
                st.lambda.insert((x, y), mu.clone());
            }
            if cy {
                st.lambda.insert((y, x), inv);
            }
        }
        st.pair.insert((x, y), rhs);
    }
    Ok(())
}

impl NCPoly {
    /// The coefficient if the polynomial is `c * w` for the given word.
    fn as_single(&self, w: &Word) -> Option<QRat> {
        let mut it = self.terms();
        match (it.next(), it.next()) {
            (Some((v, c)), None) if v == w => Some(c.clone()),
            _ => None,
        }
    }
}
