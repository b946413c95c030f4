use std::fmt;

use repforge::Param;

use crate::ClassifyError;

/// Pair `(α, β)` of a two-dimensional block whose ratio is `α/β = ±q^m`
/// with `m >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairParam {
    alpha: Param,
    beta: Param,
    m: u32,
}

impl PairParam {
    pub fn new(alpha: Param, beta: Param) -> Result<Self, ClassifyError> {
        let ratio = &alpha.value() / &beta.value();
        match ratio.as_signed_q_pow() {
            Some((_, e)) if e >= 0 => Ok(PairParam { alpha, beta, m: e as u32 }),
            _ => Err(ClassifyError::Invalid(format!("{} / {} is not ±q^m with m >= 0", alpha, beta))),
        }
    }

    /// Parses `α,β`, e.g. `+q^2,+q^0`.
    pub fn parse(s: &str) -> Result<Self, ClassifyError> {
        let (a, b) = s.split_once(',').ok_or_else(|| ClassifyError::Invalid(format!("expected α,β in {:?}", s)))?;
        let p = |t: &str| Param::parse_general(t).map_err(|e| ClassifyError::Invalid(e.to_string()));
        Self::new(p(a)?, p(b)?)
    }

    pub fn alpha(&self) -> &Param {
        &self.alpha
    }

    pub fn beta(&self) -> &Param {
        &self.beta
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `(β⁻¹, α⁻¹)`, which has the same ratio.
    pub fn inverted(&self) -> PairParam {
        PairParam { alpha: self.beta.inv(), beta: self.alpha.inv(), m: self.m }
    }
}

impl fmt::Display for PairParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// The set `{±q^b, ±q^{b+1}, ..., ±q^{b+m-1}}`, stored as the exponent
/// interval `[b, b+m-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QSpiral {
    interval: Option<(i32, i32)>,
}

impl QSpiral {
    pub fn new(base: i32, len: u32) -> Self {
        QSpiral { interval: (len > 0).then(|| (base, base + len as i32 - 1)) }
    }

    pub fn empty() -> Self {
        QSpiral { interval: None }
    }

    pub fn interval(&self) -> Option<(i32, i32)> {
        self.interval
    }

    pub fn is_empty(&self) -> bool {
        self.interval.is_none()
    }

    pub fn len(&self) -> u32 {
        self.interval.map_or(0, |(a, b)| (b - a + 1) as u32)
    }

    pub fn contains(&self, o: &QSpiral) -> bool {
        match (self.interval, o.interval) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some((a, b)), Some((c, d))) => a <= c && d <= b,
        }
    }
}

impl fmt::Display for QSpiral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.interval {
            None => write!(f, "empty"),
            Some((a, b)) => write!(f, "[{}, {}]", a, b),
        }
    }
}

/// `S_q(α, β)`; needs `β = ±q^b`.
pub fn qspiral_from_pair(p: &PairParam) -> Result<QSpiral, ClassifyError> {
    if p.m == 0 {
        return Ok(QSpiral::empty());
    }
    let (_, b) = p
        .beta
        .value()
        .as_signed_q_pow()
        .ok_or_else(|| ClassifyError::Invalid(format!("q-spiral needs β = ±q^b, got {}", p.beta)))?;
    Ok(QSpiral::new(b, p.m))
}

/// Either the union is not a q-spiral or one spiral contains the other.
pub fn general_position(s1: &QSpiral, s2: &QSpiral) -> bool {
    match (s1.interval, s2.interval) {
        (Some((a, b)), Some((c, d))) => {
            let union_is_spiral = a.max(c) <= b.min(d) + 1;
            !union_is_spiral || s1.contains(s2) || s2.contains(s1)
        }
        _ => true,
    }
}

/// Irreducibility of `L(α_1,β_1) ⊗ ... ⊗ L(α_k,β_k)` over the quantum affine algebra.
pub fn irr_predicate_affine(pairs: &[PairParam]) -> Result<bool, ClassifyError> {
    let s = pairs.iter().map(qspiral_from_pair).collect::<Result<Vec<_>, _>>()?;
    Ok((0..s.len()).all(|i| (i + 1..s.len()).all(|j| general_position(&s[i], &s[j]))))
}

/// Irreducibility of the same tensor product restricted to the twisted q-Yangian.
pub fn irr_predicate_twisted(pairs: &[PairParam]) -> Result<bool, ClassifyError> {
    let s = pairs.iter().map(qspiral_from_pair).collect::<Result<Vec<_>, _>>()?;
    let r = pairs.iter().map(|p| qspiral_from_pair(&p.inverted())).collect::<Result<Vec<_>, _>>()?;
    Ok((0..s.len()).all(|i| (i + 1..s.len()).all(|j| general_position(&s[i], &s[j]) && general_position(&r[i], &s[j]))))
}
