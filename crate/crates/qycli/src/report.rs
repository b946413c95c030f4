use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "qyw/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Fail,
    NotFinite,
    None,
}

/// Outcome of one command before it is wrapped into a report.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub result: Value,
    pub reason: Option<String>,
    pub witness: Option<Value>,
    pub seed: Option<u64>,
}

impl Outcome {
    pub fn ok(result: Value) -> Self {
        Outcome { status: Status::Ok, result, reason: None, witness: None, seed: None }
    }

    /// `ok` when `passed`, otherwise `fail` with the reason and witness.
    pub fn check(
        passed: bool,
        result: Value,
        reason: impl FnOnce() -> String,
        witness: impl FnOnce() -> Value,
    ) -> Self {
        if passed {
            Self::ok(result)
        } else {
            Outcome { status: Status::Fail, result, reason: Some(reason()), witness: Some(witness()), seed: None }
        }
    }

    pub fn with_status(mut self, status: Status, reason: Option<String>) -> Self {
        self.status = status;
        self.reason = reason;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: Vec<String>,
    pub status: Status,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: Vec<String>, o: Outcome, timing_ms: Option<u64>) -> Self {
        Report {
            schema: SCHEMA.into(),
            command,
            status: o.status,
            result: o.result,
            reason: o.reason,
            witness: o.witness,
            seed: o.seed,
            timing_ms,
        }
    }

    /// 0 unless the status is `fail`.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.status == Status::Fail)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
