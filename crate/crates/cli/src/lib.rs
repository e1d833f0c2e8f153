//! Named verification suites over the quatgrad catalog, with a versioned
//! JSON report and a markdown rendering of the same data.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use serde_json::Value;

mod suites;

pub use suites::run;

pub const SCHEMA: &str = "quatgrad/1";

/// Suites in listing order, with a one-line description.
pub const SUITES: [(&str, &str); 7] = [
    ("partitions", "centralizer-dimension sweep for one symmetric pair, with an oracle cross-check"),
    ("inequality", "sweeps over every symmetric pair and the F function"),
    ("css", "homogeneous Cartan subspaces and standard components of a catalog decomposition"),
    ("roots", "restricted root profile of a Cartan subspace"),
    ("bounds", "lower bounds for commuting varieties from kernels of roots"),
    ("jordan", "Jordan algebra of a short grading: transport identity, fibre and kernel bounds"),
    ("triad", "grading identities and bracket inclusions of a catalog decomposition"),
];

pub fn list_suites() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Suite name and parameters. Unset parameters take suite defaults, which
/// are written back before the report is assembled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pair: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub catalog: Option<String>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub witness: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, pass: bool, expected: Value, actual: Value, witness: Value) -> Self {
        Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            expected,
            actual,
            witness,
        }
    }

    /// `pass` iff `expected == actual`.
    pub fn equal(id: impl Into<String>, expected: Value, actual: Value, witness: Value) -> Self {
        let pass = expected == actual;
        Self::new(id, pass, expected, actual, witness)
    }

    pub fn skip(id: impl Into<String>, reason: impl fmt::Display) -> Self {
        Check {
            id: id.into(),
            status: Status::Skip,
            expected: Value::Null,
            actual: Value::Null,
            witness: serde_json::json!({ "reason": reason.to_string() }),
        }
    }

    pub fn error(id: impl Into<String>, err: impl fmt::Display) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            expected: Value::Null,
            actual: Value::Null,
            witness: serde_json::json!({ "error": err.to_string() }),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub suite: String,
    pub config: Config,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: Config, checks: Vec<Check>) -> Self {
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skip => summary.skipped += 1,
            }
        }
        Report {
            schema: SCHEMA.to_string(),
            suite: config.suite.clone(),
            config,
            checks,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# quatgrad report: {}", self.suite).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "schema: `{}`", self.schema).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "## Config").unwrap();
        writeln!(out).unwrap();
        writeln!(out, "| key | value |").unwrap();
        writeln!(out, "|---|---|").unwrap();
        if let Value::Object(map) = serde_json::to_value(&self.config).expect("config serializes") {
            for (k, v) in map {
                writeln!(out, "| {k} | {} |", cell(&v)).unwrap();
            }
        }
        writeln!(out).unwrap();
        writeln!(out, "## Checks").unwrap();
        writeln!(out).unwrap();
        writeln!(out, "| id | status | expected | actual | witness |").unwrap();
        writeln!(out, "|---|---|---|---|---|").unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                escape(&c.id),
                c.status,
                cell(&c.expected),
                cell(&c.actual),
                cell(&c.witness)
            )
            .unwrap();
        }
        writeln!(out).unwrap();
        writeln!(out, "## Summary").unwrap();
        writeln!(out).unwrap();
        writeln!(out, "| total | passed | failed | skipped |").unwrap();
        writeln!(out, "|---|---|---|---|").unwrap();
        let s = &self.summary;
        writeln!(out, "| {} | {} | {} | {} |", s.total, s.passed, s.failed, s.skipped).unwrap();
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Compact JSON of a value; strings are shown without quotes.
fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => escape(s),
        other => escape(&other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_report_renders() {
        let r = Report::new(Config { suite: "roots".into(), ..Config::default() }, vec![]);
        let md = r.to_markdown();
        assert!(md.contains("| id | status | expected | actual | witness |\n|---|---|---|---|---|\n\n## Summary"));
        assert!(md.contains("| 0 | 0 | 0 | 0 |"));
        assert!(r.passed());
    }

    #[test]
    fn json_round_trip() {
        let checks = vec![
            Check::equal("a", json!(2), json!(2), json!({"at": "(3,1)"})),
            Check::equal("b", json!([1, 2]), json!([1, 3]), Value::Null),
            Check::skip("c", "not applicable"),
        ];
        let r = Report::new(Config { suite: "css".into(), seed: 3, n: Some(4), ..Config::default() }, checks);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.summary, Summary { total: 3, passed: 1, failed: 1, skipped: 1 });
        assert!(!back.passed());
    }

    #[test]
    fn pipes_are_escaped() {
        let r = Report::new(
            Config { suite: "x".into(), ..Config::default() },
            vec![Check::equal("p|q", json!("a|b"), json!("a|b"), Value::Null)],
        );
        assert!(r.to_markdown().contains("| p\\|q | pass | a\\|b | a\\|b | null |"));
    }

    #[test]
    fn listing_covers_required_suites() {
        let l = list_suites();
        for s in ["partitions", "inequality", "css", "roots", "bounds", "jordan", "triad"] {
            assert!(l.contains(&s));
        }
    }
}
