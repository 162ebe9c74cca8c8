use minabc_core::{abc_index, abc_index_hp, Fixed, Tree};
use minabc_solver::{TIE_DIGITS_HP, TIE_REL_F64};

use crate::{enumerate_trees, OracleError, BRUTE_MIN, ENUM_MAX};

#[derive(Debug, Clone)]
pub struct BruteResult {
    pub n: usize,
    pub trees_searched: u64,
    /// First minimizer in enumeration order.
    pub best: Tree,
    pub abc: f64,
    pub abc_hp: Fixed,
    /// Every tree whose index ties the minimum, in enumeration order.
    pub argmins: Vec<Tree>,
}

/// Minimum ABC index over all free trees of order `n`.
///
/// Trees within `TIE_REL_F64` of the running f64 minimum are kept and
/// compared again in fixed point; trees equal to `TIE_DIGITS_HP` digits are
/// all reported.
pub fn brute_min_abc(n: usize) -> Result<BruteResult, OracleError> {
    if n < BRUTE_MIN {
        return Err(OracleError::TooSmall(n));
    }
    if n > ENUM_MAX {
        return Err(OracleError::CapExceeded(n));
    }
    let mut searched = 0u64;
    let mut min = f64::INFINITY;
    let mut close: Vec<(f64, Tree)> = Vec::new();
    for t in enumerate_trees(n)? {
        searched += 1;
        let v = abc_index(&t);
        if v <= min * (1.0 + TIE_REL_F64) {
            if v < min {
                min = v;
                close.retain(|(w, _)| *w <= min * (1.0 + TIE_REL_F64));
            }
            close.push((v, t));
        }
    }
    let scored: Vec<(Fixed, Tree)> = close.into_iter().map(|(_, t)| (abc_index_hp(&t), t)).collect();
    let best_hp = scored.iter().map(|(h, _)| h).min().cloned().expect("at least one tree");
    let argmins: Vec<Tree> = scored
        .into_iter()
        .filter(|(h, _)| h.rel_close(&best_hp, TIE_DIGITS_HP))
        .map(|(_, t)| t)
        .collect();
    let best = argmins[0].clone();
    Ok(BruteResult { n, trees_searched: searched, abc: abc_index(&best), abc_hp: abc_index_hp(&best), best, argmins })
}
