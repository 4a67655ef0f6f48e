//! Operation budgets for the exponential searches.
//!
//! The exhaustive oracles (cycle spectra, hole enumeration, path
//! enumeration) are exponential in the worst case and must fail loudly
//! instead of hanging. Every guarded search threads a [`Budget`] through
//! its recursion and aborts with [`BudgetExceeded`] once the configured
//! limit is hit.

use serde::Serialize;
use thiserror::Error;

/// Default operation budget for guarded searches (DFS node expansions).
pub const DEFAULT_OP_BUDGET: u64 = 50_000_000;

/// Default cap on the number of holes a single enumeration may produce.
pub const DEFAULT_HOLE_CAP: u64 = 1_000_000;

/// Raised when a guarded search runs out of budget. Carries how much work
/// was completed and the limit that was in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
#[error("budget exhausted: {completed} of {budget} {unit} used")]
pub struct BudgetExceeded {
    pub completed: u64,
    pub budget: u64,
    pub unit: &'static str,
}

/// A decrementing operation counter.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    limit: u64,
    used: u64,
    unit: &'static str,
}

impl Budget {
    pub fn ops(limit: u64) -> Self {
        Budget { limit, used: 0, unit: "operations" }
    }

    pub fn items(limit: u64, unit: &'static str) -> Self {
        Budget { limit, used: 0, unit }
    }

    /// Charges `amount` units, failing once the limit is exceeded.
    #[inline]
    pub fn charge(&mut self, amount: u64) -> Result<(), BudgetExceeded> {
        self.used += amount;
        if self.used > self.limit {
            Err(BudgetExceeded { completed: self.used - amount, budget: self.limit, unit: self.unit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::ops(DEFAULT_OP_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_trips_at_limit() {
        let mut b = Budget::ops(3);
        assert!(b.charge(2).is_ok());
        assert!(b.charge(1).is_ok());
        let err = b.charge(1).unwrap_err();
        assert_eq!(err, BudgetExceeded { completed: 3, budget: 3, unit: "operations" });
    }
}
