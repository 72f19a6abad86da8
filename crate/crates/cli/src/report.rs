use std::fmt::Write;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub seed: u64,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<serde_json::Value>,
}

impl SuiteReport {
    pub fn failed(&self) -> usize {
        self.cases.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn count(&self, s: Status) -> usize {
        self.cases.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Reported => "reported",
            };
            let _ = writeln!(out, "{tag:<8} {}  ({} ms)", c.id, c.elapsed_ms);
            if c.status != Status::Pass {
                let _ = writeln!(out, "         lhs: {}\n         rhs: {}", c.lhs, c.rhs);
            }
        }
        let _ = writeln!(
            out,
            "{}: {} pass, {} fail, {} reported (seed {})",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Reported),
            self.seed
        );
        out
    }
}
