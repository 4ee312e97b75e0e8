use serde::{Deserialize, Serialize};
use serde_json::Value;

/// How many counterexamples a report keeps. The total is always counted.
pub const MAX_RECORDED: usize = 64;

/// Inputs plus the two sides that disagreed. `operation` names the core
/// call to replay.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub operation: String,
    pub input: Value,
    pub expected: Value,
    pub got: Value,
}

impl Counterexample {
    pub fn new(
        operation: impl Into<String>,
        input: Value,
        expected: impl Serialize,
        got: impl Serialize,
    ) -> Self {
        Counterexample {
            operation: operation.into(),
            input,
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            got: serde_json::to_value(got).unwrap_or(Value::Null),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub envelope: String,
    pub cases: u64,
    pub failures: Vec<Counterexample>,
    pub failure_count: u64,
    /// Randomized runs that ended without a verdict. Absent for exhaustive
    /// checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inconclusive: Option<u64>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }

    /// The report as JSON with `elapsed_ms` zeroed, for comparing reruns.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0;
        serde_json::to_string(&copy).expect("reports serialize")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// One human-readable line.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} [{}] cases={} failures={} {}ms",
            self.check, self.envelope, self.cases, self.failure_count, self.elapsed_ms
        );
        if let Some(n) = self.inconclusive {
            line.push_str(&format!(" inconclusive={n}"));
        }
        line
    }
}

/// Running tally for one sweep, merged across workers in a fixed order.
#[derive(Debug, Default, Clone)]
pub(crate) struct Tally {
    pub cases: u64,
    pub failures: Vec<Counterexample>,
    pub failure_count: u64,
    pub inconclusive: u64,
}

impl Tally {
    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, c: Counterexample) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(c);
        }
    }

    /// Counts a case and records `c` unless `ok`.
    pub fn check(&mut self, ok: bool, c: impl FnOnce() -> Counterexample) {
        self.case();
        if !ok {
            self.fail(c());
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        self.inconclusive += other.inconclusive;
        for c in other.failures {
            if self.failures.len() == MAX_RECORDED {
                break;
            }
            self.failures.push(c);
        }
        self
    }

    pub fn into_report(
        self,
        check: &str,
        envelope: String,
        started: std::time::Instant,
        randomized: bool,
    ) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            envelope,
            cases: self.cases,
            failures: self.failures,
            failure_count: self.failure_count,
            inconclusive: randomized.then_some(self.inconclusive),
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}
