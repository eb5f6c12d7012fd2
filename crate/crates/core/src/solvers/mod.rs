//! Exact decision procedures used as ground truth by the verifier.
//!
//! All searches are deterministic: vertices are tried in increasing order and
//! the first certificate found is returned. Every search counts the nodes it
//! expands against a [`Budget`]; running out is reported as
//! [`Outcome::BudgetExhausted`], never as "not found".

mod disjoint;
mod hamilton;
mod matching;
mod scc;

use std::cell::Cell;

use serde::{Deserialize, Serialize};

pub use disjoint::{
    extends_to_hamiltonian, find_two_disjoint_hamiltonian_cycles,
    find_two_disjoint_perfect_matchings, perfect_matchings,
};
pub use hamilton::{
    find_hamiltonian_cycle, find_hamiltonian_cycle_bipartite, find_hamiltonian_cycle_graph,
};
pub use matching::{has_perfect_matching, max_matching};
pub use scc::{strong_components, strongly_connected};

/// Default per-solve node limit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Upper bound on search nodes a single solve may expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<W> {
    Found(W),
    NotFound,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub outcome: Outcome<W>,
    pub nodes_explored: u64,
}

impl<W> SolveResult<W> {
    pub fn found(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.outcome, Outcome::BudgetExhausted)
    }

    pub fn witness(&self) -> Option<&W> {
        match &self.outcome {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self.outcome {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }

    /// `Some(found)` when decided, `None` when the budget ran out.
    pub fn decided(&self) -> Option<bool> {
        match self.outcome {
            Outcome::Found(_) => Some(true),
            Outcome::NotFound => Some(false),
            Outcome::BudgetExhausted => None,
        }
    }
}

/// Shared node counter; nested searches draw from the same allowance.
pub(crate) struct Meter {
    used: Cell<u64>,
    limit: u64,
    exhausted: Cell<bool>,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Self {
            used: Cell::new(0),
            limit: budget.0,
            exhausted: Cell::new(false),
        }
    }

    /// Counts one node; false once the limit is passed.
    pub(crate) fn tick(&self) -> bool {
        let used = self.used.get() + 1;
        self.used.set(used);
        if used > self.limit {
            self.exhausted.set(true);
            false
        } else {
            true
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.get()
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted.get()
    }

    pub(crate) fn finish<W>(&self, found: Option<W>) -> SolveResult<W> {
        let outcome = match found {
            Some(w) => Outcome::Found(w),
            None if self.exhausted() => Outcome::BudgetExhausted,
            None => Outcome::NotFound,
        };
        SolveResult {
            outcome,
            nodes_explored: self.used(),
        }
    }
}
