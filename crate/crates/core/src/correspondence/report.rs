use std::fmt;

use serde::{Deserialize, Serialize};

use super::vev::Model;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub model: Option<Model>,
    pub n: Option<u32>,
    pub cutoff: u32,
    pub seed: u64,
}

/// Where two compared objects first disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Difference {
    pub monomial: String,
    pub left: String,
    pub right: String,
}

/// One comparison. `left` and `right` are the exact textual forms of the
/// compared objects (series, polynomials, rationals or vectors).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub left: String,
    pub right: String,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_difference: Option<Difference>,
}

impl Witness {
    /// A comparison decided by `diff`: the objects agree iff it is `None`.
    pub fn new(label: impl Into<String>, left: impl fmt::Display, right: impl fmt::Display, diff: Option<Difference>) -> Self {
        Witness {
            label: label.into(),
            left: left.to_string(),
            right: right.to_string(),
            agree: diff.is_none(),
            first_difference: diff,
        }
    }

    /// A comparison of two textual forms.
    pub fn compare(label: impl Into<String>, left: impl fmt::Display, right: impl fmt::Display) -> Self {
        let (left, right) = (left.to_string(), right.to_string());
        let diff = (left != right).then(|| Difference {
            monomial: String::new(),
            left: left.clone(),
            right: right.clone(),
        });
        Witness::new(label, left, right, diff)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub check: String,
    pub params: ReportParams,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
}

impl IdentityReport {
    pub fn new(check: impl Into<String>, params: ReportParams, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.iter().all(|w| w.agree) {
            Status::Pass
        } else {
            Status::Fail
        };
        IdentityReport {
            check: check.into(),
            params,
            status,
            witnesses,
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.witnesses.iter().find(|w| !w.agree)
    }
}
