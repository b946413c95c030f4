//! Rewriting to ordered monomials.

use std::collections::{BTreeMap, HashMap};

use exactmath::QRat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gens::{GenId, NCPoly, Word};
use crate::presentation::Presentation;
use crate::RttError;

const STEP_LIMIT: usize = 2_000_000;

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

struct Engine<'a> {
    p: &'a Presentation,
    rules: HashMap<(GenId, GenId), NCPoly>,
    lambdas: HashMap<(GenId, GenId), QRat>,
}

impl<'a> Engine<'a> {
    fn new(p: &'a Presentation) -> Self {
        Engine { p, rules: HashMap::new(), lambdas: HashMap::new() }
    }

    fn rule(&mut self, x: GenId, y: GenId) -> Result<&NCPoly, RttError> {
        if !self.rules.contains_key(&(x, y)) {
            let r = self.p.rules.target_rule(self.p, x, y)?;
            self.rules.insert((x, y), r);
        }
        Ok(&self.rules[&(x, y)])
    }

    fn lambda(&mut self, c: GenId, x: GenId) -> Result<QRat, RttError> {
        if let Some(l) = self.lambdas.get(&(c, x)) {
            return Ok(l.clone());
        }
        let l = self.p.rules.lambda(self.p, c, x)?;
        self.lambdas.insert((c, x), l.clone());
        Ok(l)
    }

    fn out_of_order(&self, w: &Word, strategy: Strategy) -> Option<usize> {
        let f = w.factors();
        let bad = |k: &usize| self.p.order_key(f[*k].0) > self.p.order_key(f[*k + 1].0);
        let n = f.len().saturating_sub(1);
        match strategy {
            Strategy::Leftmost => (0..n).find(bad),
            Strategy::Rightmost => (0..n).rev().find(bad),
        }
    }

    /// Rewrites the pair at `k, k+1` and returns the resulting combination.
    fn step(&mut self, w: &Word, k: usize) -> Result<NCPoly, RttError> {
        let f = w.factors();
        let ((x, a), (y, b)) = (f[k], f[k + 1]);
        let prefix = w.slice(0, k);
        let suffix = w.slice(k + 2, f.len());
        let (cx, cy) = (self.p.is_invertible(x), self.p.is_invertible(y));
        let middle = if cx || cy {
            let factor = if cx { self.lambda(x, y)?.pow(a * b) } else { self.lambda(y, x)?.pow(-a * b) };
            NCPoly::term(Word::from_factors([(y, b), (x, a)]), factor)
        } else {
            if a < 0 || b < 0 {
                return Err(RttError::Internal(format!("negative power of a non-invertible letter in {}", w)));
            }
            let left = NCPoly::word(Word::letter(x, a - 1));
            let right = NCPoly::word(Word::letter(y, b - 1));
            let r = self.rule(x, y)?.clone();
            &(&left * &r) * &right
        };
        let mut out = NCPoly::zero();
        for (m, c) in middle.terms() {
            out.add_term(prefix.concat(m).concat(&suffix), c.clone());
        }
        Ok(out)
    }

    fn run(&mut self, x: &NCPoly, strategy: Strategy) -> Result<NCPoly, RttError> {
        let mut work: BTreeMap<Word, QRat> = BTreeMap::new();
        for (w, c) in x.terms() {
            work.insert(w.clone(), c.clone());
        }
        let mut done = NCPoly::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = work.pop_first() {
            if c.is_zero() {
                continue;
            }
            let Some(k) = self.out_of_order(&w, strategy) else {
                done.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > STEP_LIMIT {
                return Err(RttError::Internal(format!("rewriting in {} did not terminate", self.p)));
            }
            for (v, d) in self.step(&w, k)?.into_terms() {
                let e = work.entry(v).or_default();
                *e += &c * &d;
            }
        }
        Ok(done)
    }
}

/// Straightens with the default strategy.
pub fn straighten(p: &Presentation, x: &NCPoly, cap: u32) -> Result<NCPoly, RttError> {
    straighten_with(p, x, cap, Strategy::Leftmost)
}

/// Validates `x` against `p` (levels at most `cap`) and rewrites it as a
/// combination of ordered monomials.
pub fn straighten_with(p: &Presentation, x: &NCPoly, cap: u32, strategy: Strategy) -> Result<NCPoly, RttError> {
    let x = p.canonicalize(x)?;
    let top = x.max_level();
    if top > cap {
        return Err(RttError::Cap(top, cap));
    }
    Engine::new(p).run(&x, strategy)
}

/// Straightening of both sides of every defining relation coefficient with
/// letter levels at most `max_level`; returns the relations whose difference
/// does not vanish.
pub fn relation_residuals(p: &Presentation, max_level: u32) -> Result<Vec<(NCPoly, NCPoly)>, RttError> {
    let trunc = if p.id().has_levels() { max_level + 2 } else { 0 };
    let mut engine = Engine::new(p);
    let mut bad = Vec::new();
    for inst in p.relation_instances(trunc) {
        if inst.max_level() > max_level {
            continue;
        }
        let target = inst.substitute(&mut |g, e| {
            let (h, s) = p.to_target(g);
            NCPoly::word(Word::letter(h, s * e))
        });
        let r = engine.run(&target, Strategy::Leftmost)?;
        if !r.is_zero() {
            bad.push((inst, r));
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub word: Word,
    pub leftmost: NCPoly,
    pub rightmost: NCPoly,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConfluenceReport {
    pub trials: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ConfluenceReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Straightens random words of length at most `maxlen` (letters of level at
/// most `max_level`) with the leftmost and rightmost strategies and records
/// every disagreement.
pub fn confluence_fuzz(
    p: &Presentation,
    maxlen: usize,
    trials: usize,
    seed: u64,
    max_level: u32,
) -> Result<ConfluenceReport, RttError> {
    let mut report = ConfluenceReport { trials, mismatches: Vec::new() };
    let letters = p.letters(max_level);
    if trials == 0 || maxlen == 0 || letters.is_empty() {
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut engine = Engine::new(p);
    for _ in 0..trials {
        let len = rng.gen_range(1..=maxlen);
        let mut w = Word::empty();
        for _ in 0..len {
            let g = letters[rng.gen_range(0..letters.len())];
            let pw = if p.is_invertible(g) && rng.gen_bool(0.3) { -1 } else { 1 };
            w.push(g, pw);
        }
        let x = NCPoly::word(w.clone());
        let a = engine.run(&x, Strategy::Leftmost)?;
        let b = engine.run(&x, Strategy::Rightmost)?;
        if a != b {
            report.mismatches.push(Mismatch { word: w, leftmost: a, rightmost: b });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    fn st(p: &Presentation, e: &str) -> String {
        straighten(p, &p.parse_element(e).unwrap(), 8).unwrap().to_string()
    }

    #[test]
    fn uqgl2_cartan_commutation() {
        let p = pres("uqgl:2");
        assert_eq!(st(&p, "t[1,1;0]*t[2,1;0]"), "(1/q)*t[2,1;0]*t[1,1;0]");
        assert_eq!(st(&p, "t[2,1;0]*t[1,1;0]"), "t[2,1;0]*t[1,1;0]");
    }

    #[test]
    fn uqgl2_mixed_relation_extended() {
        let p = pres("uqgl:2:ext");
        let got = straighten(&p, &p.parse_element("tb[1,2;0]*t[2,1;0]").unwrap(), 0).unwrap();
        let want = p.parse_element("t[2,1;0]*tb[1,2;0] + (q-1/q)*(t[2,2;0]*tb[1,1;0] - t[1,1;0]*tb[2,2;0])").unwrap();
        assert_eq!(got, straighten(&p, &want, 0).unwrap());
    }

    #[test]
    fn uqgl2_mixed_relation_inverse_cartan() {
        let p = pres("uqgl:2");
        let got = straighten(&p, &p.parse_element("tb[1,2;0]*t[2,1;0]").unwrap(), 0).unwrap();
        let want =
            p.parse_element("t[2,1;0]*tb[1,2;0] + (q-1/q)*(t[2,2;0]*t[1,1;0]^-1 - t[1,1;0]*t[2,2;0]^-1)").unwrap();
        assert_eq!(got, straighten(&p, &want, 0).unwrap());
    }

    #[test]
    fn ordered_monomials_are_fixed() {
        for s in ["uqgl:3", "uqo:3", "uqsp:2", "uqaff:2", "yqo:2", "yqsp:2"] {
            let p = pres(s);
            let letters = p.letters(1);
            for a in &letters {
                for b in &letters {
                    let w = Word::from_factors([(*a, 1), (*b, 1)]);
                    if p.is_ordered(&w) {
                        let x = NCPoly::word(w);
                        assert_eq!(straighten(&p, &x, 1).unwrap(), x, "{}", s);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_cartan_cancels() {
        let p = pres("uqgl:2");
        assert_eq!(st(&p, "t[1,1;0]*tb[1,1;0]"), "1");
        assert_eq!(st(&p, "t[1,1;0]*t[2,1;0]*t[1,1;0]^-1"), "(1/q)*t[2,1;0]");
    }

    #[test]
    fn rejects_bad_input() {
        let p = pres("uqgl:2");
        let e = straighten(&p, &crate::parse_element("t[1,2;0]").unwrap(), 8);
        assert!(matches!(e, Err(RttError::Generator(_))));
        let a = pres("uqaff:2");
        let e = straighten(&a, &crate::parse_element("t[1,2;3]").unwrap(), 2);
        assert_eq!(e, Err(RttError::Cap(3, 2)));
        let e = straighten(&p, &crate::parse_element("t[2,1;0]^-1").unwrap(), 8);
        assert!(e.is_err());
    }

    #[test]
    fn relations_self_consistent() {
        for (s, lvl) in
            [("uqgl:2", 0), ("uqgl:3:ext", 0), ("uqo:3", 0), ("uqsp:4", 0), ("uqaff:2", 1), ("yqo:2", 1), ("yqsp:2", 1)]
        {
            let p = pres(s);
            let bad = relation_residuals(&p, lvl).unwrap();
            assert!(bad.is_empty(), "{}: {} residuals, first {:?}", s, bad.len(), bad.first());
        }
    }

    #[test]
    fn confluence_small() {
        for s in ["uqgl:2", "uqo:3", "uqsp:2"] {
            let r = confluence_fuzz(&pres(s), 4, 40, 7, 0).unwrap();
            assert!(r.ok(), "{}: {:?}", s, r.mismatches.first());
        }
        assert_eq!(confluence_fuzz(&pres("uqgl:2"), 4, 0, 1, 0).unwrap().trials, 0);
    }

    #[test]
    fn uqsp_central_element() {
        let p = pres("uqsp:2");
        let z = p.parse_element("s[2,2;0]*s[1,1;0] - q^2*s[2,1;0]*s[1,2;0]").unwrap();
        for g in p.letters(0) {
            let x = NCPoly::gen(g);
            let c = &(&z * &x) - &(&x * &z);
            assert!(straighten(&p, &c, 0).unwrap().is_zero(), "fails for {}", g);
        }
    }
}
