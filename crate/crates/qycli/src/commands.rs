use std::fs;
use std::path::Path;

use classify::{
    classify_sp2n, drinfeld_eval_gl_n, drinfeld_from_pairs_gl2, drinfeld_sp2_from_pairs, drinfeld_sp2n_eval,
    factor_highest_weight, fdco_check, general_position, irr_predicate_affine, irr_predicate_twisted,
    qspiral_from_pair, symmetry_check, PairParam, Param, Sp2nVerdict,
};
use exactmath::{parse_qrat, QRat};
use qlinalg::MatUV;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repforge::{
    eval_affine, gl2_finite_module, highest_weight_of, tensor, twisted_eval, twisted_restrict, uqsp2_module,
    verify_relations, ModuleRep, RepError,
};
use rttcore::{
    kappa_independence_check, straighten, straighten_with, trig_inverse_check, trig_swap_check, ybe_check, AlgebraId,
    NCPoly, Presentation, Strategy, Word,
};
use serde_json::{json, Value};

use crate::report::{Outcome, Status};
use crate::{BuildKind, ClassifyArgs, ClassifyKind, Cmd, DrinfeldCmd, ModuleCmd, SpiralCmd};

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Fail(String),
}

type CmdResult = Result<Outcome, CliError>;

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn fail(e: impl ToString) -> CliError {
    CliError::Fail(e.to_string())
}

pub(crate) fn dispatch(cmd: &Cmd) -> CmdResult {
    match cmd {
        Cmd::Ybe { n } => ybe(*n),
        Cmd::TrigId { n } => trig_id(*n),
        Cmd::Straighten { algebra, expr, cap } => straighten_cmd(algebra, expr, *cap),
        Cmd::Confluence { algebra, maxlen, trials, seed, max_level } => {
            confluence(algebra, *maxlen, *trials, *seed, *max_level)
        }
        Cmd::KappaCheck { n, m, len } => kappa(*n, *m, *len),
        Cmd::Module { cmd } => module(cmd),
        Cmd::Verify { module } => verify(module),
        Cmd::Classify(a) => classify_cmd(a),
        Cmd::Spiral { cmd: SpiralCmd::Gp { pair1, pair2 } } => spiral_gp(pair1, pair2),
        Cmd::Drinfeld { cmd: DrinfeldCmd::EvalSp { p, mu } } => eval_sp(p, mu),
    }
}

fn positive(n: usize, what: &str) -> Result<(), CliError> {
    if n == 0 {
        Err(usage(format!("{} must be positive", what)))
    } else {
        Ok(())
    }
}

fn ybe(n: usize) -> CmdResult {
    positive(n, "--n")?;
    let r = ybe_check(n);
    let nnz = r.nnz();
    Ok(Outcome::check(
        nnz == 0,
        json!({ "n": n, "residual": nnz }),
        || "Yang-Baxter residual is nonzero".into(),
        || r.largest_entry().map_or(Value::Null, |(i, j, x)| json!([i, j, x.to_string()])),
    ))
}

fn nonzero_entries(m: &MatUV) -> Vec<(usize, usize)> {
    m.entries().filter(|(_, x)| !x.is_zero()).map(|(&ij, _)| ij).collect()
}

fn trig_id(n: usize) -> CmdResult {
    positive(n, "--n")?;
    let inv = nonzero_entries(&trig_inverse_check(n));
    let swap = nonzero_entries(&trig_swap_check(n));
    Ok(Outcome::check(
        inv.is_empty() && swap.is_empty(),
        json!({ "n": n, "inverse_residual": inv.len(), "swap_residual": swap.len() }),
        || "trigonometric identity residual is nonzero".into(),
        || json!({ "inverse": inv.first(), "swap": swap.first() }),
    ))
}

fn presentation(s: &str) -> Result<Presentation, CliError> {
    s.parse().map_err(usage)
}

fn straighten_cmd(algebra: &str, expr: &str, cap: u32) -> CmdResult {
    let p = presentation(algebra)?;
    let x = p.parse_element(expr).map_err(usage)?;
    let y = straighten(&p, &x, cap).map_err(fail)?;
    Ok(Outcome::ok(Value::String(y.to_string())))
}

/// Failure counts of the confluence suite on one corpus.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceSummary {
    pub words: usize,
    pub strategy_mismatches: Vec<String>,
    pub idempotence_failures: Vec<String>,
    pub linearity_failures: Vec<String>,
}

impl ConfluenceSummary {
    pub fn ok(&self) -> bool {
        self.strategy_mismatches.is_empty()
            && self.idempotence_failures.is_empty()
            && self.linearity_failures.is_empty()
    }
}

/// Seeded random words of length `1..=maxlen` in the letters of level at
/// most `max_level`; invertible letters get exponent -1 with probability 0.3.
fn corpus(p: &Presentation, maxlen: usize, trials: usize, seed: u64, max_level: u32) -> Vec<(Word, i64)> {
    let letters = p.letters(max_level);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    if letters.is_empty() || maxlen == 0 {
        return out;
    }
    for _ in 0..trials {
        let len = rng.gen_range(1..=maxlen);
        let mut w = Word::empty();
        for _ in 0..len {
            let g = letters[rng.gen_range(0..letters.len())];
            let pw = if p.is_invertible(g) && rng.gen_bool(0.3) { -1 } else { 1 };
            w.push(g, pw);
        }
        out.push((w, rng.gen_range(-3..=3)));
    }
    out
}

/// On one seeded corpus: leftmost and rightmost rewriting agree,
/// straightening is idempotent, and it is linear on consecutive pairs of
/// words with coefficients `q^k` and small integers.
pub fn confluence_suite(
    p: &Presentation,
    maxlen: usize,
    trials: usize,
    seed: u64,
    max_level: u32,
) -> Result<ConfluenceSummary, rttcore::RttError> {
    let words = corpus(p, maxlen, trials, seed, max_level);
    let mut s = ConfluenceSummary { words: words.len(), ..Default::default() };
    let mut normal = Vec::with_capacity(words.len());
    for (w, _) in &words {
        let x = NCPoly::word(w.clone());
        let a = straighten_with(p, &x, max_level, Strategy::Leftmost)?;
        let b = straighten_with(p, &x, max_level, Strategy::Rightmost)?;
        if a != b {
            s.strategy_mismatches.push(w.to_string());
        }
        if straighten(p, &a, a.max_level().max(max_level))? != a {
            s.idempotence_failures.push(w.to_string());
        }
        normal.push(a);
    }
    for i in 1..words.len() {
        let (c1, c2) = (QRat::q_pow(words[i].1 as i32), QRat::from_int(words[i - 1].1));
        let mut x = NCPoly::word(words[i - 1].0.clone()).scale(&c1);
        x.add_scaled(&NCPoly::word(words[i].0.clone()), &c2);
        let mut want = normal[i - 1].scale(&c1);
        want.add_scaled(&normal[i], &c2);
        if straighten(p, &x, max_level)? != want {
            s.linearity_failures.push(format!("{} + {}", words[i - 1].0, words[i].0));
        }
    }
    Ok(s)
}

fn confluence(algebra: &str, maxlen: usize, trials: usize, seed: u64, max_level: u32) -> CmdResult {
    let p = presentation(algebra)?;
    let s = confluence_suite(&p, maxlen, trials, seed, max_level).map_err(fail)?;
    let result = json!({
        "algebra": p.to_string(),
        "words": s.words,
        "maxlen": maxlen,
        "max_level": max_level,
        "strategy_mismatches": s.strategy_mismatches.len(),
        "idempotence_failures": s.idempotence_failures.len(),
        "linearity_failures": s.linearity_failures.len(),
    });
    let witness = || {
        json!({
            "strategy": s.strategy_mismatches.first(),
            "idempotence": s.idempotence_failures.first(),
            "linearity": s.linearity_failures.first(),
        })
    };
    Ok(Outcome::check(s.ok(), result, || "straightening is not confluent on the corpus".into(), witness)
        .with_seed(seed))
}

fn kappa(n: usize, m: u32, len: usize) -> CmdResult {
    positive(n, "--n")?;
    let ok = kappa_independence_check(n, m, len).map_err(fail)?;
    Ok(Outcome::check(
        ok,
        json!({ "n": n, "m": m, "len": len, "independent": ok }),
        || "images of ordered monomials are linearly dependent".into(),
        || json!({ "n": n, "m": m }),
    ))
}

fn scalar(s: &str) -> Result<QRat, CliError> {
    let t = s.trim();
    parse_qrat(t.strip_prefix('+').unwrap_or(t)).map_err(|e| usage(format!("{}: {}", s, e)))
}

fn param(s: &str) -> Result<Param, CliError> {
    Param::parse_general(s).map_err(usage)
}

fn list<T>(s: &str, f: impl Fn(&str) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
    s.split(',').map(|t| f(t.trim())).collect()
}

fn int(s: &str) -> Result<i64, CliError> {
    s.parse().map_err(|_| usage(format!("{:?} is not an integer", s)))
}

fn pairs(s: &str) -> Result<Vec<PairParam>, CliError> {
    s.split(';').filter(|t| !t.trim().is_empty()).map(|t| PairParam::parse(t).map_err(usage)).collect()
}

/// Reads a module file, or the module inside a saved report.
pub fn load_module(path: &Path) -> Result<ModuleRep, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {}", path.display(), e))?;
    let m = if v.get("schema").is_some() { &v["result"]["module"] } else { &v };
    ModuleRep::from_json(m).map_err(|e| format!("{}: {}", path.display(), e))
}

fn load(path: &Path) -> Result<ModuleRep, CliError> {
    load_module(path).map_err(usage)
}

fn module_outcome(m: Result<ModuleRep, RepError>, out: &Option<std::path::PathBuf>) -> CmdResult {
    let m = match m {
        Ok(m) => m,
        Err(RepError::NotFinite(depth)) => {
            return Ok(Outcome::ok(json!({ "depth": depth }))
                .with_status(Status::NotFinite, Some(RepError::NotFinite(depth).to_string())));
        }
        Err(e @ (RepError::Invalid(_) | RepError::CapMismatch(..))) => return Err(usage(e)),
        Err(e) => return Err(fail(e)),
    };
    let mj = m.to_json();
    let mut result = json!({
        "presentation": m.presentation().to_string(),
        "dim": m.dim(),
        "cap": m.cap(),
        "module": mj,
    });
    if let Some(path) = out {
        fs::write(path, serde_json::to_string_pretty(&result["module"]).unwrap())
            .map_err(|e| fail(format!("{}: {}", path.display(), e)))?;
        result["file"] = json!(path.display().to_string());
    }
    Ok(Outcome::ok(result))
}

fn required<'a>(x: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    x.as_deref().ok_or_else(|| usage(format!("{} is required", flag)))
}

fn module(cmd: &ModuleCmd) -> CmdResult {
    match cmd {
        ModuleCmd::Build { kind: BuildKind::Gl2, alpha, beta, depth, out, .. } => {
            let a = param(required(alpha, "--alpha")?)?;
            let b = param(required(beta, "--beta")?)?;
            module_outcome(gl2_finite_module(&a.value(), &b.value(), *depth), out)
        }
        ModuleCmd::Build { kind: BuildKind::Uqsp2, mu, mup, depth, out, .. } => {
            let m = scalar(required(mu, "--mu")?)?;
            let mp = scalar(required(mup, "--mup")?)?;
            module_outcome(uqsp2_module(&m, &mp, *depth), out)
        }
        ModuleCmd::Tensor { a, b, out } => module_outcome(tensor(&load(a)?, &load(b)?), out),
        ModuleCmd::Restrict { module, out } => module_outcome(twisted_restrict(&load(module)?), out),
        ModuleCmd::Eval { module, cap, out } => {
            let m = load(module)?;
            let r = match m.presentation().id() {
                AlgebraId::Uqgl | AlgebraId::UqglExt => eval_affine(&m, *cap),
                AlgebraId::Uqsp => twisted_eval(&m, *cap),
                id => return Err(usage(format!("no evaluation homomorphism for {}", id.name()))),
            };
            module_outcome(r, out)
        }
    }
}

fn verify(path: &Path) -> CmdResult {
    let m = load(path)?;
    let r = verify_relations(&m).map_err(fail)?;
    let result = json!({
        "presentation": m.presentation().to_string(),
        "dim": m.dim(),
        "cap": m.cap(),
        "checked": r.checked,
        "failures": r.failures.len(),
    });
    let witness = || r.to_json()["failures"][0].clone();
    Ok(Outcome::check(r.ok(), result, || "nonzero relation residual".into(), witness))
}

fn spirals(ps: &[PairParam]) -> Result<Vec<String>, CliError> {
    ps.iter().map(|p| qspiral_from_pair(p).map(|s| s.to_string()).map_err(usage)).collect()
}

fn classify_cmd(a: &ClassifyArgs) -> CmdResult {
    match a.kind {
        ClassifyKind::Gl2 => {
            let ps = pairs(required(&a.pairs, "--pairs")?)?;
            let p = drinfeld_from_pairs_gl2(&ps);
            Ok(Outcome::ok(json!({
                "spirals": spirals(&ps)?,
                "irreducible": irr_predicate_affine(&ps).map_err(usage)?,
                "drinfeld": p.to_json(),
            })))
        }
        ClassifyKind::GlN => {
            let m = list(required(&a.m, "--m")?, int)?;
            let ps = drinfeld_eval_gl_n(&m).map_err(usage)?;
            Ok(Outcome::ok(json!({ "drinfeld": ps.iter().map(|p| p.to_json()).collect::<Vec<_>>() })))
        }
        ClassifyKind::Sp2 => {
            let ps = pairs(required(&a.pairs, "--pairs")?)?;
            let inv: Vec<PairParam> = ps.iter().map(PairParam::inverted).collect();
            let p = drinfeld_sp2_from_pairs(&ps);
            Ok(Outcome::ok(json!({
                "spirals": spirals(&ps)?,
                "inverted_spirals": spirals(&inv)?,
                "irreducible": irr_predicate_twisted(&ps).map_err(usage)?,
                "drinfeld": p.to_json(),
                "symmetric": symmetry_check(&p),
            })))
        }
        ClassifyKind::Sp2n => match (&a.module, &a.mu, &a.mup) {
            (Some(path), _, _) => classify_module(&load(path)?, a.dmax),
            (None, Some(mu), Some(mup)) => classify_finite(mu, mup),
            _ => Err(usage("sp2n needs --module, or --mu and --mup")),
        },
    }
}

fn classify_module(m: &ModuleRep, dmax: usize) -> CmdResult {
    if m.presentation().id() != AlgebraId::Yqsp {
        return Err(usage(format!("sp2n classification needs a yqsp module, got {}", m.presentation())));
    }
    let h = m.highest_index().ok_or_else(|| usage("the module has no recorded highest vector"))?;
    let mut v = vec![QRat::zero(); m.dim()];
    v[h] = QRat::one();
    let hw = highest_weight_of(m, &v).map_err(fail)?;
    let dmax = dmax.min((m.cap() as usize).saturating_sub(1) / 2);
    let fw = factor_highest_weight(&hw, dmax).map_err(fail)?;
    Ok(match classify_sp2n(&fw).map_err(fail)? {
        Sp2nVerdict::Finite(r) => Outcome::ok(json!({ "finite": true, "drinfeld": r.to_json() })),
        Sp2nVerdict::NotFD(why) => Outcome::ok(json!({ "finite": false })).with_status(Status::NotFinite, Some(why)),
    })
}

fn classify_finite(mu: &str, mup: &str) -> CmdResult {
    let mu = list(mu, scalar)?;
    let mup = list(mup, scalar)?;
    if mu.len() != mup.len() {
        return Err(usage("--mu and --mup must have the same length"));
    }
    let (p, ok) = fdco_check(&mu, &mup);
    if !ok {
        return Ok(Outcome::ok(json!({ "finite": false, "p": p }))
            .with_status(Status::NotFinite, Some("μ'_i = -q^{2p_i+1} μ_i has no nondecreasing solution".into())));
    }
    let p: Vec<i64> = p.into_iter().flatten().collect();
    let params: Vec<Param> = mu.iter().map(|x| Param::from_qrat(x.clone()).map_err(usage)).collect::<Result<_, _>>()?;
    let r = drinfeld_sp2n_eval(&p, &params).map_err(usage)?;
    Ok(Outcome::ok(json!({ "finite": true, "p": p, "drinfeld": r.to_json() })))
}

fn spiral_gp(p1: &str, p2: &str) -> CmdResult {
    let a = PairParam::parse(p1).map_err(usage)?;
    let b = PairParam::parse(p2).map_err(usage)?;
    let (s1, s2) = (qspiral_from_pair(&a).map_err(usage)?, qspiral_from_pair(&b).map_err(usage)?);
    Ok(Outcome::ok(json!({
        "s1": s1.to_string(),
        "s2": s2.to_string(),
        "general_position": general_position(&s1, &s2),
    })))
}

fn eval_sp(p: &str, mu: &str) -> CmdResult {
    let p = list(p, int)?;
    let mu = list(mu, param)?;
    let r = drinfeld_sp2n_eval(&p, &mu).map_err(usage)?;
    Ok(Outcome::ok(r.to_json()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_seeded() {
        let p: Presentation = "uqgl:2".parse().unwrap();
        let a = corpus(&p, 3, 20, 4, 0);
        assert_eq!(a, corpus(&p, 3, 20, 4, 0));
        assert_ne!(a, corpus(&p, 3, 20, 5, 0));
        assert!(a.iter().all(|(w, _)| (1..=3).contains(&w.factors().len())));
        assert!(corpus(&p, 0, 20, 4, 0).is_empty());
    }

    #[test]
    fn list_parsing() {
        assert_eq!(list("1, 2,3", int).unwrap(), [1, 2, 3]);
        assert!(matches!(list("1,x", int), Err(CliError::Usage(_))));
        assert_eq!(pairs("q^2,1;q^3,q").unwrap().len(), 2);
        assert!(pairs("q^2").is_err());
    }

    #[test]
    fn suite_on_finite_algebra() {
        let p: Presentation = "uqgl:2".parse().unwrap();
        let s = confluence_suite(&p, 3, 30, 1, 0).unwrap();
        assert_eq!(s.words, 30);
        assert!(s.ok());
    }
}
