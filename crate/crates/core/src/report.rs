//! Pass/fail bookkeeping shared by the verification sweeps.

use std::fmt::Display;

use serde_json::{json, Value};

/// One failed comparison with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub params: Value,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({ "params": self.params, "expected": self.expected, "actual": self.actual })
    }
}

/// Outcome of a verification sweep. Cases outside the checked domain are
/// counted as skipped rather than silently dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub suite: String,
    pub ranges: Value,
    pub checked: usize,
    pub skipped: usize,
    pub failed: Vec<Failure>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), ranges: Value::Null, checked: 0, skipped: 0, failed: Vec::new() }
    }

    pub fn with_ranges(mut self, ranges: Value) -> Self {
        self.ranges = ranges;
        self
    }

    /// Record a comparison; returns whether it passed.
    pub fn compare<T: PartialEq + Display>(&mut self, params: Value, expected: &T, actual: &T) -> bool {
        self.checked += 1;
        let ok = expected == actual;
        if !ok {
            self.failed.push(Failure { params, expected: expected.to_string(), actual: actual.to_string() });
        }
        ok
    }

    /// Record a boolean check with a free-form description of the failure.
    pub fn check(&mut self, params: Value, ok: bool, detail: impl FnOnce() -> (String, String)) -> bool {
        self.checked += 1;
        if !ok {
            let (expected, actual) = detail();
            self.failed.push(Failure { params, expected, actual });
        }
        ok
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failed.extend(other.failed);
    }

    pub fn passed(&self) -> bool {
        self.failed.is_empty() && self.checked > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "ranges": self.ranges,
            "checked": self.checked,
            "skipped": self.skipped,
            "failed": self.failed.iter().map(Failure::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn summary(&self) -> String {
        format!(
            "{:<10} {} checked={} skipped={} failed={}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.skipped,
            self.failed.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_json() {
        let mut r = Report::new("demo");
        assert!(!r.passed());
        r.compare(json!({"x": 1}), &1, &1);
        r.compare(json!({"x": 2}), &1, &2);
        r.skip();
        assert!(!r.passed());
        let j = r.to_json();
        assert_eq!(j["checked"], 2);
        assert_eq!(j["failed"][0]["actual"], "2");
    }
}
