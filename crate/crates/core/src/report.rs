//! Structured outcome of a verification sweep.

use std::time::Instant;

use serde::{Deserialize, Serialize};

const MAX_WITNESSES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRange {
    pub lo: i64,
    pub hi: i64,
}

/// One checked claim. `witness` lists the first few failing cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub anchor: String,
    pub status: Status,
    pub cases: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub range: SweepRange,
    pub checks: Vec<Check>,
    /// Total number of failing cases across all checks.
    pub failures: u64,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn check(&self, anchor: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.anchor == anchor)
    }

    /// Concatenates reports under a new suite name. The range is the hull of
    /// the parts.
    pub fn merge(suite: &str, parts: Vec<VerifyReport>) -> VerifyReport {
        let lo = parts.iter().map(|r| r.range.lo).min().unwrap_or(0);
        let hi = parts.iter().map(|r| r.range.hi).max().unwrap_or(0);
        let mut checks = Vec::new();
        let mut failures = 0;
        let mut elapsed_ms = 0;
        for p in parts {
            failures += p.failures;
            elapsed_ms += p.elapsed_ms;
            checks.extend(p.checks);
        }
        VerifyReport {
            suite: suite.to_string(),
            range: SweepRange { lo, hi },
            checks,
            failures,
            elapsed_ms,
        }
    }

    /// Failing checks, as `anchor: witness` lines.
    pub fn failure_summary(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| format!("{}: {}", c.anchor, c.witness.as_deref().unwrap_or("")))
            .collect()
    }
}

#[derive(Debug)]
struct Pending {
    anchor: String,
    cases: u64,
    failed: u64,
    witnesses: Vec<String>,
}

/// Accumulates cases per anchor, in first-seen order.
#[derive(Debug)]
pub struct ReportBuilder {
    suite: String,
    range: SweepRange,
    started: Instant,
    checks: Vec<Pending>,
}

impl ReportBuilder {
    pub fn new(suite: &str, lo: i64, hi: i64) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            range: SweepRange { lo, hi },
            started: Instant::now(),
            checks: Vec::new(),
        }
    }

    fn slot(&mut self, anchor: &str) -> &mut Pending {
        let idx = match self.checks.iter().position(|c| c.anchor == anchor) {
            Some(i) => i,
            None => {
                self.checks.push(Pending {
                    anchor: anchor.to_string(),
                    cases: 0,
                    failed: 0,
                    witnesses: Vec::new(),
                });
                self.checks.len() - 1
            }
        };
        &mut self.checks[idx]
    }

    /// Records one case. The witness closure only runs on failure.
    pub fn record<F: FnOnce() -> String>(&mut self, anchor: &str, ok: bool, witness: F) {
        let slot = self.slot(anchor);
        slot.cases += 1;
        if !ok {
            slot.failed += 1;
            if slot.witnesses.len() < MAX_WITNESSES {
                slot.witnesses.push(witness());
            }
        }
    }

    /// Records the result of a fallible case; errors count as failures.
    pub fn record_result<E: std::fmt::Display>(
        &mut self,
        anchor: &str,
        outcome: std::result::Result<bool, E>,
        witness: impl FnOnce() -> String,
    ) {
        match outcome {
            Ok(ok) => self.record(anchor, ok, witness),
            Err(e) => {
                let w = witness();
                self.record(anchor, false, || format!("{w} (error: {e})"))
            }
        }
    }

    pub fn finish(self) -> VerifyReport {
        let mut failures = 0;
        let checks = self
            .checks
            .into_iter()
            .map(|p| {
                failures += p.failed;
                let witness = if p.failed == 0 {
                    None
                } else {
                    let mut w = p.witnesses.join("; ");
                    if p.failed > p.witnesses.len() as u64 {
                        w.push_str(&format!(" (+{} more)", p.failed - p.witnesses.len() as u64));
                    }
                    Some(w)
                };
                Check {
                    anchor: p.anchor,
                    status: if p.failed == 0 {
                        Status::Pass
                    } else {
                        Status::Fail
                    },
                    cases: p.cases,
                    witness,
                }
            })
            .collect();
        VerifyReport {
            suite: self.suite,
            range: self.range,
            checks,
            failures,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_counts_and_keeps_order() {
        let mut b = ReportBuilder::new("demo", 1, 10);
        for n in 1..=10 {
            b.record("even", n % 2 == 0 || n > 100, || format!("n={n}"));
            b.record("all", true, String::new);
        }
        let r = b.finish();
        assert_eq!(r.checks[0].anchor, "even");
        assert_eq!(r.checks[0].cases, 10);
        assert_eq!(r.checks[0].status, Status::Fail);
        assert_eq!(r.failures, 5);
        assert_eq!(
            r.checks[0].witness.as_deref(),
            Some("n=1; n=3; n=5 (+2 more)")
        );
        assert_eq!(r.checks[1].status, Status::Pass);
        assert!(r.checks[1].witness.is_none());
        assert!(!r.passed());
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let mut b = ReportBuilder::new("demo", 1, 3);
        b.record("x", false, || "n=2".into());
        let r = b.finish();
        let s = serde_json::to_string(&r).unwrap();
        let back: VerifyReport = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
