//! Exact search engines.
//!
//! [`constrained_perfect_matching`] and [`two_cut_recursion`] look for perfect
//! matchings of cubic graphs meeting every prescribed cycle.
//! [`bipartite_alternating_matching`] handles 2-regular bipartite graphs, and
//! [`t_factor_oracle`] is an independent brute-force search for `t`-factors
//! used to check everything else.

mod bipartite;
mod matching;
mod oracle;
mod two_cut;

use std::fmt;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::Factor;

pub use bipartite::bipartite_alternating_matching;
pub use matching::constrained_perfect_matching;
pub use oracle::t_factor_oracle;
pub use two_cut::two_cut_recursion;

/// Optional caps on search effort. Both absent means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            max_seconds: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_nodes == Some(0) {
            return Err(Error::Precondition("max_nodes must be positive".into()));
        }
        if let Some(s) = self.max_seconds {
            if s.is_nan() || s <= 0.0 {
                return Err(Error::Precondition(format!(
                    "max_seconds must be positive, got {s}"
                )));
            }
        }
        Ok(())
    }
}

/// Node counter and wall clock shared by one search.
#[derive(Debug)]
pub(crate) struct Clock {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
}

impl Clock {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Clock {
            budget,
            start: Instant::now(),
            nodes: 0,
        }
    }

    /// Counts one node; false once a cap is exceeded.
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|cap| self.nodes > cap) {
            return false;
        }
        match self.budget.max_seconds {
            Some(cap) if self.nodes % 256 == 0 => self.start.elapsed().as_secs_f64() <= cap,
            _ => true,
        }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Sat(Factor),
    Unsat,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub status: Status,
    pub nodes: u64,
    /// Number of nested 2-edge-cut reductions applied.
    pub cut_depth: usize,
}

impl OracleVerdict {
    pub fn witness(&self) -> Option<&Factor> {
        match &self.status {
            Status::Sat(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self.status, Status::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        self.status == Status::Unsat
    }
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Sat(_) => "SAT",
            Status::Unsat => "UNSAT",
            Status::BudgetExceeded => "BUDGET",
        };
        write!(f, "{tag} nodes={}", self.nodes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_line() {
        let v = OracleVerdict {
            status: Status::Unsat,
            nodes: 12,
            cut_depth: 0,
        };
        assert_eq!(v.to_string(), "UNSAT nodes=12");
        let v = OracleVerdict {
            status: Status::BudgetExceeded,
            nodes: 3,
            cut_depth: 0,
        };
        assert_eq!(v.to_string(), "BUDGET nodes=3");
    }

    #[test]
    fn budget_caps() {
        assert!(SearchBudget::nodes(0).validate().is_err());
        assert!(SearchBudget {
            max_nodes: None,
            max_seconds: Some(0.0)
        }
        .validate()
        .is_err());
        let mut c = Clock::new(SearchBudget::nodes(2));
        assert!(c.tick() && c.tick() && !c.tick());
        assert_eq!(c.nodes(), 3);
    }
}
