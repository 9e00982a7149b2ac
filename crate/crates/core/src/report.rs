//! Pass/fail reports shared by every checker.

use std::time::Instant;

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::series::{HalfExp, QSeries};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

pub(crate) fn rational_string<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// First exponent at which the two compared sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstMismatch {
    pub t_units: HalfExp,
    #[serde(serialize_with = "rational_string")]
    pub lhs: BigRational,
    #[serde(serialize_with = "rational_string")]
    pub rhs: BigRational,
}

/// Outcome of one equality check between two computed sides.
///
/// `identity` names the check and the two sides, e.g.
/// `theorem-1: lhs_series = theorem_rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub trunc_t_units: HalfExp,
    pub status: Status,
    pub first_mismatch: Option<FirstMismatch>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn from_mismatch(identity: impl Into<String>, trunc: HalfExp, mismatch: Option<FirstMismatch>, started: Instant) -> Self {
        VerificationReport {
            identity: identity.into(),
            trunc_t_units: trunc,
            status: if mismatch.is_some() { Status::Fail } else { Status::Pass },
            first_mismatch: mismatch,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    /// Compares two series up to `trunc` (or their own smaller order).
    pub fn compare(identity: impl Into<String>, lhs: &QSeries, rhs: &QSeries, trunc: HalfExp, started: Instant) -> Self {
        let mismatch = lhs
            .truncate(trunc)
            .first_difference(&rhs.truncate(trunc))
            .map(|m| FirstMismatch { t_units: m.exponent, lhs: m.left, rhs: m.right });
        Self::from_mismatch(identity, trunc, mismatch, started)
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    /// JSON object `{identity, trunc_t_units, status, first_mismatch, elapsed_ms}`.
    /// Timing is left out when `with_timing` is false so output stays
    /// byte-identical between runs.
    pub fn to_json(&self, with_timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if !with_timing {
            v.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    }
}
