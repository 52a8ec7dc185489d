//! The JSON report and its stderr table.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use qcurv_core::ibp::Certificate;

/// A float written with 17 significant digits; non-finite values become
/// `null`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    ExactZero,
    CertifiedDivergence,
    NumericPass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::ExactZero => "exact-zero",
            Status::CertifiedDivergence => "certified-divergence",
            Status::NumericPass => "numeric-pass",
            Status::Fail => "fail",
        }
    }

    pub fn numeric(ok: bool) -> Self {
        if ok {
            Status::NumericPass
        } else {
            Status::Fail
        }
    }

    pub fn exact(ok: bool) -> Self {
        if ok {
            Status::ExactZero
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateTerm {
    pub coefficient: String,
    pub field: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateJson {
    pub target: String,
    pub columns_searched: usize,
    pub terms: Vec<CertificateTerm>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            target: c.target.notation(),
            columns_searched: c.searched,
            terms: c
                .notation()
                .into_iter()
                .map(|(coefficient, field)| CertificateTerm { coefficient, field })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub residual: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    /// Negative controls: the underlying check is supposed to fail.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub expected_fail: bool,
}

impl Record {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, status: Status, residual: Option<f64>) -> Self {
        Record {
            id: id.into(),
            anchor: anchor.into(),
            status,
            residual: residual.map(Num),
            detail: None,
            certificate: None,
            expected_fail: false,
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn certificate(mut self, c: &Certificate) -> Self {
        self.certificate = Some(c.into());
        self
    }

    pub fn expecting_fail(mut self) -> Self {
        self.expected_fail = true;
        self
    }

    /// The record's outcome matches what is expected of it.
    pub fn ok(&self) -> bool {
        (self.status == Status::Fail) == self.expected_fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trace {
    pub id: String,
    pub residuals: Vec<Num>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Meta {
    pub case: Option<String>,
    pub n: Option<String>,
    pub geometry: Option<String>,
    pub profile: Option<String>,
    pub s: Option<Num>,
    pub p: Option<String>,
    pub seed: Option<u64>,
    pub nodes: Option<usize>,
    pub tol: Option<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionSummary {
    pub number: u8,
    pub title: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub meta: Meta,
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub traces: Vec<Trace>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub criteria: Vec<CriterionSummary>,
    pub passed: bool,
}

pub const SCHEMA: &str = "qcurv-report/1";

impl Report {
    pub fn new(command: &str, meta: Meta, records: Vec<Record>, traces: Vec<Trace>) -> Self {
        let passed = records.iter().all(Record::ok);
        Report { schema: SCHEMA, command: command.into(), meta, records, traces, criteria: Vec::new(), passed }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Fixed-width summary for standard error.
    pub fn table(&self) -> String {
        let width = self.records.iter().map(|r| r.id.chars().count()).max().unwrap_or(2).max(2);
        let mut out = format!("{:<width$}  {:<20}  residual\n", "id", "status");
        for r in &self.records {
            let res = match r.residual {
                Some(Num(v)) if v.is_finite() => format!("{v:.3e}"),
                _ => "-".into(),
            };
            let mark = if r.expected_fail { " (expected)" } else { "" };
            out.push_str(&format!("{:<width$}  {:<20}  {res}{mark}\n", r.id, r.status.name()));
        }
        for c in &self.criteria {
            out.push_str(&format!("criterion {}: {} ({})\n", c.number, if c.passed { "pass" } else { "FAIL" }, c.title));
        }
        out.push_str(if self.passed { "overall: pass\n" } else { "overall: FAIL\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(serde_json::to_string(&Num(0.1)).unwrap(), "1.0000000000000001e-1");
        assert_eq!(serde_json::to_string(&Num(f64::NAN)).unwrap(), "null");
        let back: f64 = serde_json::from_str(&serde_json::to_string(&Num(1.0 / 3.0)).unwrap()).unwrap();
        assert_eq!(back, 1.0 / 3.0);
    }

    #[test]
    fn expected_failures_count_as_ok() {
        let r = Record::new("x", "a", Status::Fail, None).expecting_fail();
        let rep = Report::new("t", Meta::default(), vec![r], vec![]);
        assert!(rep.passed);
        let r = Record::new("x", "a", Status::NumericPass, None).expecting_fail();
        assert!(!r.ok());
    }
}
