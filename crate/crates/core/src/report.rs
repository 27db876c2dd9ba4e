//! Verification reports shared by every bounded check.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A finite window of an infinite claim was checked; nothing beyond the bound is asserted.
    VerifiedUpToBound,
}

impl Status {
    pub fn is_success(self) -> bool {
        !matches!(self, Status::Fail)
    }
}

/// Outcome of a single check. A failing report always carries a witness.
///
/// `elapsed` is kept out of the JSON body so that output is byte-deterministic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, status: Status, witness: Option<Value>) -> Self {
        let claim = claim.into();
        assert!(
            status != Status::Fail || witness.is_some(),
            "failing report for {claim} needs a witness"
        );
        VerificationReport { claim, params: BTreeMap::new(), status, witness, elapsed: Duration::ZERO }
    }

    pub fn pass(claim: impl Into<String>, witness: Option<Value>) -> Self {
        Self::new(claim, Status::Pass, witness)
    }

    pub fn fail(claim: impl Into<String>, witness: Value) -> Self {
        Self::new(claim, Status::Fail, Some(witness))
    }

    pub fn bounded(claim: impl Into<String>, witness: Option<Value>) -> Self {
        Self::new(claim, Status::VerifiedUpToBound, witness)
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    pub fn passed(&self) -> bool {
        self.status.is_success()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn status_serializes_kebab_case() {
        let r = VerificationReport::bounded("x", None).param("b", 3);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"claim":"x","params":{"b":3},"status":"verified-up-to-bound"}"#);
    }

    #[test]
    #[should_panic(expected = "needs a witness")]
    fn fail_without_witness_panics() {
        VerificationReport::new("x", Status::Fail, None);
    }

    #[test]
    fn fail_carries_witness() {
        let r = VerificationReport::fail("x", json!({"at": 1}));
        assert!(!r.passed());
        assert_eq!(r.witness, Some(json!({"at": 1})));
    }
}
