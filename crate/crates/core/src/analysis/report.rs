use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::complexity::{ComplexityProfile, Level};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// A row where a check did not hold: the position, what should have been
/// there and what was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<Level>,
    pub n: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub fitted_constants: BTreeMap<String, f64>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.status)?;
        for (name, value) in &self.fitted_constants {
            write!(f, " {name}={value}")?;
        }
        for w in self.witnesses.iter().take(8) {
            write!(f, "\n  ")?;
            if let Some(k) = w.k {
                write!(f, "k={k} ")?;
            }
            write!(f, "n={}: expected {}, got {}", w.n, w.expected, w.actual)?;
        }
        if self.witnesses.len() > 8 {
            write!(f, "\n  ... {} more", self.witnesses.len() - 8)?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

const MAX_WITNESSES: usize = 64;

pub(crate) struct ReportBuilder {
    report: VerificationReport,
    failures: usize,
    blocked: usize,
}

impl ReportBuilder {
    pub fn new(check: &str) -> Self {
        ReportBuilder {
            report: VerificationReport {
                check: check.to_owned(),
                params: BTreeMap::new(),
                status: Status::Pass,
                witnesses: Vec::new(),
                fitted_constants: BTreeMap::new(),
                notes: Vec::new(),
            },
            failures: 0,
            blocked: 0,
        }
    }

    pub fn param(mut self, name: &str, value: impl Serialize) -> Self {
        self.report
            .params
            .insert(name.to_owned(), serde_json::to_value(value).expect("param serializes"));
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.notes.push(note.into());
    }

    pub fn fit(&mut self, name: &str, value: f64) {
        self.report.fitted_constants.insert(name.to_owned(), value);
    }

    pub fn fail(&mut self, k: Option<Level>, n: usize, expected: impl ToString, actual: impl ToString) {
        self.failures += 1;
        self.report.status = Status::Fail;
        if self.report.witnesses.len() < MAX_WITNESSES {
            self.report.witnesses.push(Witness {
                k,
                n,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records a row; rows resting on unconverged values only mark the
    /// report inconclusive.
    pub fn check(
        &mut self,
        converged: bool,
        ok: bool,
        k: Option<Level>,
        n: usize,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        if !converged {
            self.blocked += 1;
            self.report.status = self.report.status.combine(Status::Inconclusive);
        } else if !ok {
            self.fail(k, n, expected, actual);
        }
    }

    pub fn inconclusive(&mut self, note: impl Into<String>) {
        self.report.status = self.report.status.combine(Status::Inconclusive);
        self.note(note);
    }

    /// Marks the report inconclusive if the profile has unconverged entries.
    pub fn require_converged(&mut self, p: &ComplexityProfile) -> bool {
        match p.first_unconverged() {
            None => true,
            Some(n) => {
                self.inconclusive(format!(
                    "{} at k={} unconverged from n={} (window {})",
                    p.spec(),
                    p.level(),
                    n,
                    p.window_length()
                ));
                false
            }
        }
    }

    pub fn finish(mut self) -> VerificationReport {
        if self.failures > self.report.witnesses.len() {
            let extra = self.failures - self.report.witnesses.len();
            self.note(format!("{extra} further failing rows not listed"));
        }
        if self.blocked > 0 {
            let blocked = self.blocked;
            self.note(format!("{blocked} rows skipped on unconverged values"));
        }
        self.report
    }
}

/// Smallest integer `c` with `values[n - 1] <= c log2(n) + c` for every `n`.
pub(crate) fn log_constant(values: &[usize]) -> u64 {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let scale = ((i + 1) as f64).log2() + 1.0;
            // Integer search avoids rounding a ratio that is exactly integral.
            let mut c = (v as f64 / scale).floor() as u64;
            while (c as f64) * scale < v as f64 {
                c += 1;
            }
            c
        })
        .max()
        .unwrap_or(0)
}

/// Least and greatest of `num / den` over the pairs.
pub(crate) fn ratio_bounds(pairs: impl IntoIterator<Item = (usize, usize)>) -> (f64, f64) {
    pairs
        .into_iter()
        .map(|(num, den)| num as f64 / den as f64)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r), hi.max(r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_combination() {
        use Status::*;
        assert_eq!(Pass.combine(Pass), Pass);
        assert_eq!(Pass.combine(Inconclusive), Inconclusive);
        assert_eq!(Inconclusive.combine(Fail), Fail);
        assert_eq!(Fail.combine(Pass), Fail);
    }

    #[test]
    fn fail_has_witness() {
        let mut b = ReportBuilder::new("demo").param("n_max", 3);
        b.check(true, true, None, 1, 2, 2);
        b.check(false, false, None, 2, 2, 1);
        assert_eq!(b.report.status, Status::Inconclusive);
        b.check(true, false, Some(Level::Finite(2)), 3, "<= 8", 10);
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses.len(), 1);
        let j = r.to_json();
        assert_eq!(j["status"], "fail");
        assert_eq!(j["witnesses"][0]["k"], 2);
        assert_eq!(j["params"]["n_max"], 3);
    }

    #[test]
    fn log_constant_is_smallest() {
        // 2 <= c*1 + ... at n = 1 forces c = 2; 4 at n = 4 needs 3c >= 4.
        assert_eq!(log_constant(&[2, 2, 3, 4]), 2);
        assert_eq!(log_constant(&[3]), 3);
        assert_eq!(log_constant(&[2, 4, 6, 8]), 3);
    }
}
