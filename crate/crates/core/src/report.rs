//! Verification reports.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub params: String,
    pub witness: String,
}

impl Check {
    pub fn new(id: impl Into<String>, status: Status) -> Self {
        Check {
            id: id.into(),
            status,
            params: String::new(),
            witness: String::new(),
        }
    }

    pub fn pass(id: impl Into<String>) -> Self {
        Self::new(id, Status::Pass)
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(id, Status::Fail).with_witness(witness)
    }

    pub fn of(id: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        let c = Self::new(id, Status::from_bool(ok));
        if ok {
            c
        } else {
            c.with_witness(witness)
        }
    }

    pub fn with_params(mut self, params: impl Into<String>) -> Self {
        self.params = params.into();
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = witness.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// Appends the checks of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}{}", c.id);
            self.checks.push(c);
        }
    }

    /// Fail beats indeterminate beats pass. An empty report passes.
    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Indeterminate) {
            Status::Indeterminate
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn find(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Process exit code: 0 pass, 1 fail, 3 indeterminate.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Indeterminate => 3,
        }
    }

    /// Header line followed by one tab-separated line per check.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "# suite={} status={} checks={}",
            self.suite,
            self.status().as_str(),
            self.checks.len()
        );
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}",
                c.id,
                c.status.as_str(),
                sanitize(&c.params),
                sanitize(&c.witness)
            );
        }
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            suite: &'a str,
            status: Status,
            checks: &'a [Check],
        }
        serde_json::to_string_pretty(&Out {
            suite: &self.suite,
            status: self.status(),
            checks: &self.checks,
        })
        .expect("report serializes")
    }
}

fn sanitize(s: &str) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.replace(['\t', '\n'], " ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status() {
        let mut r = Report::new("demo");
        assert!(r.passed());
        r.push(Check::pass("a"));
        r.push(Check::new("b", Status::Indeterminate));
        assert_eq!(r.status(), Status::Indeterminate);
        assert_eq!(r.exit_code(), 3);
        r.push(Check::fail("c", "x^3"));
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn text_format() {
        let mut r = Report::new("demo");
        r.push(Check::pass("a").with_params("L=1 d=4 d_out=4"));
        r.push(Check::fail("b", "x\ty"));
        let text = r.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# suite=demo status=fail checks=2");
        assert_eq!(lines[1], "a\tpass\tL=1 d=4 d_out=4\t-");
        assert_eq!(lines[2], "b\tfail\t-\tx y");
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("demo");
        r.push(Check::pass("a"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["checks"][0]["id"], "a");
    }
}
