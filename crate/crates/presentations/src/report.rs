//! Machine-readable verification reports.

use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub computed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tag: String,
    pub kind: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(tag: impl Into<String>, kind: impl Into<String>) -> Self {
        VerificationReport { tag: tag.into(), kind: kind.into(), checks: Vec::new(), seed: None, elapsed_ms: 0, started: Some(Instant::now()) }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&mut self, name: impl Into<String>, computed: impl Display, expected: impl Display) -> bool {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let passed = computed == expected;
        self.checks.push(Check { name: name.into(), passed, computed, expected });
        passed
    }

    pub fn check_bool(&mut self, name: impl Into<String>, value: bool) -> bool {
        self.check(name, value, true)
    }

    /// Records the outcome of a fallible computation: its value on success,
    /// the error as a failed check otherwise.
    pub fn check_result<T: Display, E: Display>(&mut self, name: impl Into<String>, computed: Result<T, E>, expected: impl Display) -> bool {
        match computed {
            Ok(v) => self.check(name, v, expected),
            Err(e) => {
                self.checks.push(Check { name: name.into(), passed: false, computed: format!("error: {e}"), expected: expected.to_string() });
                false
            }
        }
    }

    pub fn error(&mut self, name: impl Into<String>, e: impl Display) {
        self.checks.push(Check { name: name.into(), passed: false, computed: format!("error: {e}"), expected: "no error".into() });
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    pub fn merge(&mut self, other: VerificationReport) {
        let prefix = other.kind.clone();
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.name = format!("{prefix}/{}", c.name);
            c
        }));
        self.seed = self.seed.or(other.seed);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = VerificationReport::new("E6", "small");
        r.check("dim", 72, 72);
        r.check_result::<usize, String>("fat", Err("boom".into()), 6);
        r.seed = Some(7);
        let r = r.finish();
        assert!(!r.passed());
        let s = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.failures().count(), 1);
    }
}
