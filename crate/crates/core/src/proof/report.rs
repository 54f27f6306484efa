//! Named checks and their aggregate.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A step taken on trust rather than computed.
    Axiom,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Axiom => "AXIOM",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub group: String,
    pub anchor: String,
    pub inputs: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Check {
    /// Passes when `expected == computed`.
    pub fn compare(
        group: &str,
        name: &str,
        anchor: &str,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Check {
            name: name.into(),
            group: group.into(),
            anchor: anchor.into(),
            inputs: inputs.into(),
            expected,
            computed,
            status,
        }
    }

    pub fn axiom(group: &str, name: &str, anchor: &str, statement: &str) -> Self {
        Check {
            name: name.into(),
            group: group.into(),
            anchor: anchor.into(),
            inputs: String::new(),
            expected: statement.into(),
            computed: "assumed".into(),
            status: Status::Axiom,
        }
    }

    pub fn is_axiom(&self) -> bool {
        self.status == Status::Axiom
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub status: Status,
}

impl VerificationReport {
    /// Passes iff no computed check fails; axioms do not count either way.
    pub fn new(checks: Vec<Check>) -> Self {
        let status = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        VerificationReport { checks, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn computed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.is_axiom())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_aggregation() {
        let ok = Check::compare("g", "a", "x", "", "1", "1");
        let bad = Check::compare("g", "b", "x", "", "1", "2");
        let ax = Check::axiom("g", "c", "x", "trust me");
        assert!(VerificationReport::new(vec![ok.clone(), ax.clone()]).passed());
        assert!(!VerificationReport::new(vec![ok, bad, ax]).passed());
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::new(vec![Check::compare("g", "a", "x", "", "1", "1")]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["checks"][0]["anchor"], "x");
    }
}
