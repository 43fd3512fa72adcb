//! Check records and the aggregated verification report.
//!
//! The serialized `body` of a report depends only on the run configuration,
//! so two runs with the same configuration and seed produce identical bodies.
//! Wall-clock timings are kept next to the body, never inside it.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// What a single check found.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub scanned: u64,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub message: String,
    pub witness: Value,
}

impl Outcome {
    pub fn pass(scanned: u64) -> Self {
        Outcome {
            scanned,
            failure: None,
        }
    }

    pub fn fail(scanned: u64, message: impl Into<String>, witness: Value) -> Self {
        Outcome {
            scanned,
            failure: Some(Failure {
                message: message.into(),
                witness,
            }),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.failure.is_none()
    }

    /// Merge a sequence of sub-outcomes: counts add up, the first failure wins.
    pub fn merge(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut scanned = 0;
        let mut failure = None;
        for o in outcomes {
            scanned += o.scanned;
            if failure.is_none() {
                failure = o.failure;
            }
        }
        Outcome { scanned, failure }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckRecord {
    pub id: String,
    /// Short name of the property being checked.
    pub anchor: String,
    /// Field order the check ran over, if it depends on one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<u32>,
    pub status: Status,
    pub scanned: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One human-readable line.
    pub fn summary_line(&self) -> String {
        let field = self.field.map(|q| format!(" q={q}")).unwrap_or_default();
        let mut line = format!(
            "[{}] {}{} ({}; {} scanned, {:.3}s)",
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            self.id,
            field,
            self.anchor,
            self.scanned,
            self.elapsed.as_secs_f64()
        );
        if let Some(m) = &self.message {
            line.push_str(&format!("\n       {m}"));
        }
        if let Some(w) = &self.witness {
            line.push_str(&format!("\n       witness: {w}"));
        }
        line
    }
}

/// Time `f` and package its outcome as a record.
pub fn run_check(
    id: &str,
    anchor: &str,
    field: Option<u32>,
    f: impl FnOnce() -> Outcome,
) -> CheckRecord {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (status, message, witness) = match outcome.failure {
        None => (Status::Pass, None, None),
        Some(Failure { message, witness }) => (Status::Fail, Some(message), Some(witness)),
    };
    CheckRecord {
        id: id.to_owned(),
        anchor: anchor.to_owned(),
        field,
        status,
        scanned: outcome.scanned,
        message,
        witness,
        elapsed,
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RunConfig {
    pub fields: Vec<u32>,
    pub seed: u64,
    pub samples: u64,
    pub slow: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutation: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ReportBody {
    pub suite: String,
    pub config: RunConfig,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub body: ReportBody,
}

impl CheckReport {
    pub fn new(suite: &str, config: RunConfig, checks: Vec<CheckRecord>) -> Self {
        let passed = checks.iter().all(CheckRecord::passed);
        CheckReport {
            body: ReportBody {
                suite: suite.to_owned(),
                config,
                passed,
                checks,
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.body.passed
    }

    pub fn checks(&self) -> &[CheckRecord] {
        &self.body.checks
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.body.checks.iter().filter(|c| !c.passed())
    }

    pub fn body_json(&self) -> Value {
        serde_json::to_value(&self.body).expect("report body serializes")
    }

    /// `{"schema": 1, "body": {...}, "timing_ms": {...}}`.
    pub fn to_json(&self) -> Value {
        let timing: BTreeMap<String, f64> = self
            .body
            .checks
            .iter()
            .map(|c| {
                let key = match c.field {
                    Some(q) => format!("{}@{}", c.id, q),
                    None => c.id.clone(),
                };
                (key, (c.elapsed.as_secs_f64() * 1e6).round() / 1e3)
            })
            .collect();
        serde_json::json!({
            "schema": SCHEMA_VERSION,
            "body": self.body_json(),
            "timing_ms": timing,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_is_conjunction() {
        let ok = run_check("a", "x", None, || Outcome::pass(3));
        let bad = run_check("b", "y", Some(3), || {
            Outcome::fail(1, "boom", serde_json::json!([1]))
        });
        let cfg = RunConfig {
            fields: vec![3],
            seed: 0,
            samples: 1,
            slow: false,
            mutation: None,
        };
        assert!(CheckReport::new("s", cfg.clone(), vec![ok.clone()]).passed());
        let r = CheckReport::new("s", cfg, vec![ok, bad]);
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        let json = r.to_json();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["body"]["checks"][1]["status"], "fail");
        assert!(json["body"]["checks"][0].get("elapsed").is_none());
    }

    #[test]
    fn merge_keeps_first_failure() {
        let m = Outcome::merge([
            Outcome::pass(2),
            Outcome::fail(1, "first", Value::Null),
            Outcome::fail(1, "second", Value::Null),
        ]);
        assert_eq!(m.scanned, 4);
        assert_eq!(m.failure.unwrap().message, "first");
    }
}
