//! Structured verdicts of axiom checks.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub input: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub axiom: String,
    pub passed: bool,
    pub cases: usize,
    pub violation: Option<Violation>,
}

impl AxiomEntry {
    /// Evaluates `check` on every case in parallel and keeps the first
    /// violation in case order.
    pub fn run<T, F>(axiom: &str, cases: &[T], check: F) -> AxiomEntry
    where
        T: Sync,
        F: Fn(&T) -> Option<Violation> + Sync + Send,
    {
        let violation = cases.par_iter().find_map_first(check);
        AxiomEntry {
            axiom: axiom.to_string(),
            passed: violation.is_none(),
            cases: cases.len(),
            violation,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub subject: String,
    pub max_len: usize,
    pub entries: Vec<AxiomEntry>,
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(subject: &str, max_len: usize) -> Self {
        CheckReport {
            subject: subject.to_string(),
            max_len,
            entries: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn with_entries(subject: &str, max_len: usize, entries: Vec<AxiomEntry>) -> Self {
        CheckReport {
            entries,
            ..CheckReport::new(subject, max_len)
        }
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, axiom: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn verdicts(&self) -> Vec<(String, bool)> {
        self.entries
            .iter()
            .map(|e| (e.axiom.clone(), e.passed))
            .collect()
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
        self.elapsed_ms = match (self.elapsed_ms, other.elapsed_ms) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
    }

    pub fn render_text(&self, timing: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "subject = {}", self.subject);
        let _ = writeln!(s, "max_len = {}", self.max_len);
        for e in &self.entries {
            let verdict = if e.passed { "pass" } else { "fail" };
            let _ = writeln!(s, "axiom {} = {} (cases {})", e.axiom, verdict, e.cases);
            if let Some(v) = &e.violation {
                let _ = writeln!(s, "  input = {}", v.input);
                let _ = writeln!(s, "  residual = {}", v.residual);
            }
        }
        if timing {
            if let Some(ms) = self.elapsed_ms {
                let _ = writeln!(s, "elapsed_ms = {ms}");
            }
        }
        let _ = writeln!(
            s,
            "verdict = {}",
            if self.passed() { "pass" } else { "fail" }
        );
        s
    }

    pub fn to_json(&self, timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if !timing {
            if let Some(obj) = v.as_object_mut() {
                obj.remove("elapsed_ms");
            }
        }
        v
    }
}
