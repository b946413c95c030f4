use std::fmt;

use exactmath::{parse_qrat, QRat};

use crate::RepError;

/// Nonzero module parameter: a signed power `±q^a` or, when explicitly
/// allowed, an arbitrary nonzero rational function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    QPow { sign: i64, exp: i32 },
    General(QRat),
}

impl Param {
    pub fn q_pow(sign: i64, exp: i32) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        Param::QPow { sign, exp }
    }

    /// Classifies a nonzero value, preferring the signed-power form.
    pub fn from_qrat(x: QRat) -> Result<Self, RepError> {
        if x.is_zero() {
            return Err(RepError::Invalid("parameter must be nonzero".into()));
        }
        Ok(match x.as_signed_q_pow() {
            Some((sign, exp)) => Param::QPow { sign, exp },
            None => Param::General(x),
        })
    }

    /// Parses `+q^3`, `-q^-2`, `q`, `1`; only signed powers of `q` are accepted.
    pub fn parse(s: &str) -> Result<Self, RepError> {
        match Self::parse_general(s)? {
            p @ Param::QPow { .. } => Ok(p),
            Param::General(x) => Err(RepError::Invalid(format!("{} is not a signed power of q", x))),
        }
    }

    /// Parses any nonzero element of Q(q).
    pub fn parse_general(s: &str) -> Result<Self, RepError> {
        let t = s.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        let x = parse_qrat(t).map_err(|e| RepError::Invalid(format!("{}: {}", s, e)))?;
        Self::from_qrat(x)
    }

    pub fn value(&self) -> QRat {
        match self {
            Param::QPow { sign, exp } => QRat::signed_q_pow(*sign, *exp),
            Param::General(x) => x.clone(),
        }
    }

    pub fn as_signed_q_pow(&self) -> Option<(i64, i32)> {
        match self {
            Param::QPow { sign, exp } => Some((*sign, *exp)),
            Param::General(_) => None,
        }
    }

    pub fn inv(&self) -> Param {
        match self {
            Param::QPow { sign, exp } => Param::QPow { sign: *sign, exp: -exp },
            Param::General(x) => Param::General(x.inv().expect("parameters are nonzero")),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::QPow { sign, exp } => {
                write!(f, "{}q^{}", if *sign > 0 { '+' } else { '-' }, exp)
            }
            Param::General(x) => write!(f, "{}", x),
        }
    }
}
