//! Corpus harness: per-record scanning, the structural check suite,
//! counterexample hunts, JSON Lines reports, and the exit-code contract.
//!
//! Exit codes: 0 all pass; 1 a structural violation was found (and a
//! counterexample bundle written); 2 input error; 3 a budget guard
//! tripped, leaving coverage incomplete. When several apply, the smaller
//! code wins: a violation outranks everything.

pub mod lemmas;
pub mod scan;

use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

pub use lemmas::{run_lemma_suite, LemmaOutcome, Verdict, LEMMA_IDS};
pub use scan::{run_scan, write_jsonl, CertificateSummary, ScanOptions, ScanRecord, ScanReport, ScanSummary};

/// The disproof-grade event record written when a run finds a violation:
/// the offending graph, the operation whose guarantee broke, the
/// preconditions that were verified before declaring it, and the witness.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CounterexampleBundle {
    pub graph6: String,
    pub operation: String,
    pub preconditions_verified: Vec<String>,
    pub witness: Value,
}

/// Appends bundles to a file, one JSON object per line.
pub fn append_bundles(path: &Path, bundles: &[CounterexampleBundle]) -> io::Result<()> {
    if bundles.is_empty() {
        return Ok(());
    }
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    for b in bundles {
        serde_json::to_writer(&mut f, b)?;
        f.write_all(b"\n")?;
    }
    Ok(())
}

/// Aggregated run state that decides the process exit code.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunStatus {
    pub violation: bool,
    pub input_error: bool,
    pub budget_exhausted: bool,
}

impl RunStatus {
    pub fn merge(&mut self, other: RunStatus) {
        self.violation |= other.violation;
        self.input_error |= other.input_error;
        self.budget_exhausted |= other.budget_exhausted;
    }

    pub fn exit_code(&self) -> i32 {
        if self.violation {
            1
        } else if self.input_error {
            2
        } else if self.budget_exhausted {
            3
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_priority() {
        let mut s = RunStatus::default();
        assert_eq!(s.exit_code(), 0);
        s.budget_exhausted = true;
        assert_eq!(s.exit_code(), 3);
        s.input_error = true;
        assert_eq!(s.exit_code(), 2);
        s.violation = true;
        assert_eq!(s.exit_code(), 1);
    }
}
