use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::charformulas::GradedCharacter;
use crate::qalg::QPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One side of a checked identity, kept only for failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    Character(GradedCharacter),
    Poly(QPoly),
    Integer(BigInt),
}

impl Side {
    fn to_json(&self) -> Value {
        match self {
            Side::Character(c) => c.to_json(),
            Side::Poly(p) => Value::String(p.to_string()),
            Side::Integer(n) => Value::String(n.to_string()),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Character(c) => write!(f, "character with {} terms, dimension {}", c.terms().len(), c.dimension()),
            Side::Poly(p) => write!(f, "{p}"),
            Side::Integer(n) => write!(f, "{n}"),
        }
    }
}

/// Outcome of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    /// `(name, value)` pairs in a fixed order.
    pub params: Vec<(String, String)>,
    pub status: Status,
    /// Why a check was skipped.
    pub reason: Option<String>,
    /// Both sides, present exactly when the status is `Fail`.
    pub sides: Option<(Side, Side)>,
}

impl VerificationReport {
    pub fn new(identity: &str, params: Vec<(String, String)>) -> Self {
        VerificationReport { identity: identity.to_string(), params, status: Status::Pass, reason: None, sides: None }
    }

    /// Pass if `lhs == rhs`, fail otherwise with both sides attached.
    pub fn compare(mut self, lhs: Side, rhs: Side) -> Self {
        if lhs == rhs {
            self.status = Status::Pass;
            self.sides = None;
        } else {
            self.status = Status::Fail;
            self.sides = Some((lhs, rhs));
        }
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.reason = Some(reason.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> =
            self.params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let mut v = json!({
            "identity": self.identity,
            "params": params,
            "status": self.status.to_string(),
        });
        if let Some(r) = &self.reason {
            v["reason"] = Value::String(r.clone());
        }
        if let Some((l, r)) = &self.sides {
            v["lhs"] = l.to_json();
            v["rhs"] = r.to_json();
        }
        v
    }

    /// `name=value` pairs joined by spaces.
    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", self.status, self.identity, self.params_string())?;
        if let Some(r) = &self.reason {
            write!(f, " ({r})")?;
        }
        if let Some((l, r)) = &self.sides {
            write!(f, " lhs: {l}; rhs: {r}")?;
        }
        Ok(())
    }
}

/// Build a parameter list from `name => value` pairs.
#[macro_export]
#[doc(hidden)]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {
        vec![$(($k.to_string(), $v.to_string())),*]
    };
}
