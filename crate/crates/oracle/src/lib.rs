//! Independent ground truth for small orders.
//!
//! [`enumerate_trees`] yields every free tree of a given order exactly once
//! (level-sequence successor generation), [`brute_min_abc`] minimizes the ABC
//! index over them, and [`family_exhaustive`] runs the family solver with all
//! degree-threshold pruning disabled.

mod brute;
mod free;

pub use brute::{brute_min_abc, BruteResult};
pub use free::{enumerate_trees, level_sequence_to_tree, FreeTrees};

use minabc_solver::{solve_with, SolveError, SolveOptions, SolveResult};
use thiserror::Error;

/// Largest order the enumerator accepts.
pub const ENUM_MAX: usize = 20;
/// Smallest order [`brute_min_abc`] accepts.
pub const BRUTE_MIN: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {0} is above the enumeration cap of {ENUM_MAX}")]
    CapExceeded(usize),
    #[error("order {0} is below the supported minimum")]
    TooSmall(usize),
}

/// Minimum over the whole constraint box with no degree-threshold pruning.
pub fn family_exhaustive(n: u64) -> Result<SolveResult, SolveError> {
    solve_with(n, SolveOptions { prune: false })
}
