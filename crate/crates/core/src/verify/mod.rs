//! Drivers that check each structural statement on concrete instances, and
//! the classification pipeline with its certificates.
//!
//! Every driver evaluates its hypotheses first. A conclusion is only
//! reported as certified on an instance whose hypotheses all passed; on any
//! other instance the computed quantities appear as diagnostics.

mod checks;
mod classify;
mod drivers;

use serde::Serialize;

pub use checks::{m_certificate, regular_module};
pub use classify::{classify_theorem_a, ClassificationReport, Verdict};
pub use drivers::{
    gl25scan, lemma22, lemma22_pipeline, prop32, prop32_case, prop34, prop34_case, remark21, remark21_case, remark31,
    remark31_case, remark35, theorem_a, Pipeline34Data,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Pass,
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Process exit code: 0 pass, 1 fail, 3 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Certificate {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }
}

/// Whether a case is meant to satisfy the statement or to be rejected by it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Holds,
    Rejected,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub subject: String,
    pub expect: Expect,
    /// `pass`: hypotheses hold and every conclusion is certified.
    /// `fail`: a hypothesis or a conclusion failed.
    pub outcome: Status,
    pub hypotheses: Vec<Certificate>,
    pub conclusions: Vec<Certificate>,
    pub diagnostics: Vec<String>,
}

impl CaseReport {
    pub fn new(subject: impl Into<String>, expect: Expect) -> Self {
        Self {
            subject: subject.into(),
            expect,
            outcome: Status::Pass,
            hypotheses: Vec::new(),
            conclusions: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn hypothesis(&mut self, name: &str, status: Status, detail: impl Into<String>) -> bool {
        self.hypotheses.push(Certificate::new(name, status, detail));
        status == Status::Pass
    }

    pub fn conclusion(&mut self, name: &str, status: Status, detail: impl Into<String>) -> bool {
        self.conclusions.push(Certificate::new(name, status, detail));
        status == Status::Pass
    }

    pub fn diagnostic(&mut self, text: impl Into<String>) {
        self.diagnostics.push(text.into());
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.status == Status::Pass)
    }

    /// Computes `outcome` from the certificates.
    pub fn finish(mut self) -> Self {
        let all = self.hypotheses.iter().chain(&self.conclusions);
        self.outcome = all.fold(Status::Pass, |acc, c| acc.combine(c.status));
        self
    }

    pub fn as_expected(&self) -> bool {
        match self.expect {
            Expect::Holds => self.outcome == Status::Pass,
            Expect::Rejected => self.outcome == Status::Fail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DriverReport {
    pub driver: String,
    pub statement: String,
    pub status: Status,
    pub cases: Vec<CaseReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub classifications: Vec<ClassificationReport>,
}

impl DriverReport {
    pub fn new(driver: &str) -> Self {
        Self {
            driver: driver.into(),
            statement: statement(driver).unwrap_or_default().into(),
            status: Status::Pass,
            cases: Vec::new(),
            classifications: Vec::new(),
        }
    }

    /// A driver passes when every case behaves as expected.
    pub fn finish(mut self) -> Self {
        self.status = self.cases.iter().fold(Status::Pass, |acc, c| {
            let s = if c.as_expected() {
                Status::Pass
            } else if c.outcome == Status::Inconclusive {
                Status::Inconclusive
            } else {
                Status::Fail
            };
            acc.combine(s)
        });
        self
    }
}

/// Driver names in the order `all` runs them.
pub const DRIVERS: [&str; 8] = [
    "remark21", "lemma22", "remark31", "prop32", "prop34", "remark35", "theoremA", "gl25scan",
];

/// The statement a driver checks, in words.
pub fn statement(driver: &str) -> Option<&'static str> {
    Some(match driver {
        "remark21" => "a non-singular invariant form on a module with the eigenvector property over a field with more than 3 elements is alternating",
        "lemma22" => "a point centralizer C of largest order fixes W = C_V(C) pointwise with C = C_G(w) on W, N_G(W) = N_G(C), and W inherits the eigenvector property and non-singular forms",
        "remark31" => "faithful simple F5-modules of the generalized quaternion group of order 2^m have dimension 2^(m-2)",
        "prop32" => "a q-group acting fixed-point-freely with the eigenvector property and a non-singular invariant form over F_p, p >= 5, forces p = 5, S = Q8 and V x| S = C5^2 x| Q8",
        "prop34" => "a simple module with the eigenvector property for a rational 2-group is induced from a block W on which N_G(W)/C_G(W) acts as Q8 inside C5^2 x| Q8",
        "remark35" => "g -> (t_i g t_sigma(i)^-1 C)_i sigma is a homomorphism into (H/C) wr S_n whose kernel is the core of C",
        "theoremA" => "a faithful module with the eigenvector property for a rational 2-group over F_p, p >= 5, has p = 5, G = Q8 wr K and V x| G = (C5^2 x| Q8) wr K",
        "gl25scan" => "the 2-subgroups of GL(2,5) acting faithfully and rationally on F5^2 with the eigenvector property are exactly copies of Q8 with C5^2 x| Q8",
        _ => return None,
    })
}

/// Runs a built-in driver on its default corpus.
pub fn run_driver(name: &str, cap: usize, seed: u64) -> crate::Result<DriverReport> {
    match name {
        "remark21" => remark21(seed),
        "lemma22" => lemma22(cap, seed),
        "remark31" => remark31(cap, seed),
        "prop32" => prop32(cap, seed),
        "prop34" => prop34(cap, seed),
        "remark35" => remark35(cap),
        "theoremA" => theorem_a(cap, seed),
        "gl25scan" => gl25scan(cap),
        other => Err(crate::Error::OutOfRange(format!("unknown driver {other:?}"))),
    }
}

pub fn run_all(cap: usize, seed: u64) -> crate::Result<Vec<DriverReport>> {
    DRIVERS.iter().map(|d| run_driver(d, cap, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_CAP;

    fn check(name: &str) -> DriverReport {
        let r = run_driver(name, DEFAULT_CAP, 0).unwrap();
        for c in &r.cases {
            assert!(c.as_expected(), "{name}: {c:#?}");
        }
        assert_eq!(r.status, Status::Pass);
        r
    }

    #[test]
    fn remark21_driver() {
        check("remark21");
    }

    #[test]
    fn lemma22_driver() {
        check("lemma22");
    }

    #[test]
    fn remark31_driver() {
        check("remark31");
    }

    #[test]
    fn prop32_driver() {
        let r = check("prop32");
        assert!(r.cases[1].diagnostics.iter().any(|d| d == "p = 3 < 5"));
        let failed: Vec<&str> = r.cases[1]
            .hypotheses
            .iter()
            .filter(|c| c.status != Status::Pass)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(failed, ["p >= 5"]);
    }

    #[test]
    fn prop34_driver() {
        check("prop34");
    }

    #[test]
    fn remark35_driver() {
        check("remark35");
    }

    #[test]
    fn theorem_a_driver() {
        let r = check("theoremA");
        let shapes: Vec<(Option<usize>, Option<usize>)> = r.classifications.iter().map(|c| (c.n, c.k_order)).collect();
        assert_eq!(shapes, [(Some(1), Some(1)), (Some(2), Some(2)), (Some(2), Some(1))]);
    }

    #[test]
    fn gl25scan_driver() {
        check("gl25scan");
    }
}
