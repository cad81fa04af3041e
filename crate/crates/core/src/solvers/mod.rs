//! Search over refueling orders.
//!
//! Every exact solver returns the lexicographically smallest optimal order,
//! so results can be compared verbatim across solvers.

use std::time::Duration;

use crate::instance::Sequence;
use crate::rational::Rational;

mod approx;
mod bnb;
mod brute;
mod constrained_dp;
mod decide;
mod greedy;
mod suffix_dp;

pub use bnb::solve_branch_and_bound;
pub use brute::solve_brute_force;
pub use constrained_dp::{solve_constrained_dp, solve_constrained_dp_exact};
pub use decide::{decide_nvep, verify_certificate, Decision};
pub use greedy::greedy_heuristic;
pub use suffix_dp::{solve_suffix_dp, solve_suffix_dp_exact};

/// Size caps, in vehicles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub brute_force: usize,
    /// One `f64` and one byte per subset: 2^24 subsets is ~150 MB.
    pub suffix_dp: usize,
    /// One `f64` and one byte per (subset, first vehicle): 20 * 2^20 states is ~190 MB.
    pub constrained_dp: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            brute_force: 10,
            suffix_dp: 24,
            constrained_dp: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    BruteForce,
    SuffixDp,
    ConstrainedDp,
    BranchAndBound,
    Greedy,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::BruteForce => "brute-force",
            Self::SuffixDp => "suffix-dp",
            Self::ConstrainedDp => "constrained-dp",
            Self::BranchAndBound => "branch-and-bound",
            Self::Greedy => "greedy",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub subsets_filled: u64,
    pub permutations_enumerated: u64,
    pub pruned: u64,
    /// Near-ties the float prefilter handed to exact arithmetic.
    pub exact_resolutions: u64,
    pub wall_time: Duration,
}

impl SearchStats {
    pub fn to_pairs(&self) -> Vec<(&'static str, String)> {
        vec![
            ("nodes_expanded", self.nodes_expanded.to_string()),
            ("subsets_filled", self.subsets_filled.to_string()),
            ("permutations_enumerated", self.permutations_enumerated.to_string()),
            ("pruned", self.pruned.to_string()),
            ("exact_resolutions", self.exact_resolutions.to_string()),
            ("wall_ms", format!("{:.3}", self.wall_time.as_secs_f64() * 1e3)),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Best {
    pub sequence: Sequence,
    pub distance: Rational,
}

/// `best == None` means the constraints admit no complete order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub solver: SolverKind,
    pub best: Option<Best>,
    pub optimal: bool,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn is_infeasible(&self) -> bool {
        self.best.is_none()
    }

    pub fn sequence(&self) -> Option<&Sequence> {
        self.best.as_ref().map(|b| &b.sequence)
    }

    pub fn distance(&self) -> Option<&Rational> {
        self.best.as_ref().map(|b| &b.distance)
    }
}
