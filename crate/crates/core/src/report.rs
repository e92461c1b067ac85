//! Machine-readable outcomes of identity checks.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One verified identity. `lhs`, `rhs` and `first_discrepancy` are filled
/// only when the check does not pass, which keeps passing reports small.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub first_discrepancy: Option<String>,
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<I, V>(items: I) -> BTreeMap<String, Value>
where
    I: IntoIterator<Item = (&'static str, V)>,
    V: Into<Value>,
{
    items.into_iter().map(|(k, v)| (k.to_string(), v.into())).collect()
}

impl CheckReport {
    pub fn pass(check: &str, parameters: BTreeMap<String, Value>) -> Self {
        Self {
            check: check.to_string(),
            parameters,
            status: Status::Pass,
            lhs: None,
            rhs: None,
            first_discrepancy: None,
        }
    }

    pub fn fail(
        check: &str,
        parameters: BTreeMap<String, Value>,
        lhs: String,
        rhs: String,
        first_discrepancy: String,
    ) -> Self {
        Self {
            check: check.to_string(),
            parameters,
            status: Status::Fail,
            lhs: Some(lhs),
            rhs: Some(rhs),
            first_discrepancy: Some(first_discrepancy),
        }
    }

    /// A check that could not be evaluated; the error text goes in
    /// `first_discrepancy`.
    pub fn error(check: &str, parameters: BTreeMap<String, Value>, err: &Error) -> Self {
        Self {
            check: check.to_string(),
            parameters,
            status: Status::Error,
            lhs: None,
            rhs: None,
            first_discrepancy: Some(err.to_string()),
        }
    }

    /// Passes iff `lhs == rhs`; on failure renders both and calls
    /// `locate` for the first differing entry.
    pub fn compare<T: PartialEq + Display>(
        check: &str,
        parameters: BTreeMap<String, Value>,
        lhs: &T,
        rhs: &T,
        locate: impl FnOnce() -> String,
    ) -> Self {
        if lhs == rhs {
            Self::pass(check, parameters)
        } else {
            Self::fail(check, parameters, lhs.to_string(), rhs.to_string(), locate())
        }
    }

    /// Runs a fallible check body, converting an `Err` into an error report.
    pub fn guard(
        check: &str,
        parameters: BTreeMap<String, Value>,
        body: impl FnOnce(BTreeMap<String, Value>) -> crate::Result<Self>,
    ) -> Self {
        match body(parameters.clone()) {
            Ok(r) => r,
            Err(e) => Self::error(check, parameters, &e),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The first key (in map order) whose values differ, rendered as
/// `"<key>: lhs <a>, rhs <b>"`.
pub fn first_map_discrepancy<K, V>(lhs: &BTreeMap<K, V>, rhs: &BTreeMap<K, V>) -> Option<String>
where
    K: Ord + std::fmt::Debug,
    V: PartialEq + Display + Default,
{
    let zero = V::default();
    let mut keys: Vec<&K> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().find_map(|k| {
        let (a, b) = (lhs.get(k).unwrap_or(&zero), rhs.get(k).unwrap_or(&zero));
        (a != b).then(|| format!("{k:?}: lhs {a}, rhs {b}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_fills_fields_only_on_failure() {
        let ok = CheckReport::compare("eq", params([("n", 1)]), &1, &1, || unreachable!());
        assert!(ok.is_pass());
        assert!(ok.lhs.is_none() && ok.first_discrepancy.is_none());
        let bad = CheckReport::compare("eq", params([("n", 1)]), &1, &2, || "value".into());
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.lhs.as_deref(), Some("1"));
        assert_eq!(bad.first_discrepancy.as_deref(), Some("value"));
    }

    #[test]
    fn json_schema() {
        let r = CheckReport::pass("hook", params([("lambda", "(2,1)")]));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["parameters"]["lambda"], "(2,1)");
        for key in ["check", "lhs", "rhs", "first_discrepancy"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn discrepancy_location() {
        let a = BTreeMap::from([(1, 5), (2, 7)]);
        let b = BTreeMap::from([(1, 5), (3, 7)]);
        assert_eq!(first_map_discrepancy(&a, &b).unwrap(), "2: lhs 7, rhs 0");
        assert!(first_map_discrepancy(&a, &a).is_none());
    }

    #[test]
    fn guard_converts_errors() {
        let r = CheckReport::guard("g", params([("n", 0)]), |_| {
            Err(Error::Domain("bad".into()))
        });
        assert_eq!(r.status, Status::Error);
        assert!(r.first_discrepancy.unwrap().contains("bad"));
    }
}
