use minabc_core::Fixed;
use minabc_family::{closed_form_abc, closed_form_abc_hp, FamilyParams};
use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::{for_each_candidate, Cell};

/// Orders from this value on are covered by the characterization.
pub const VALIDITY_THRESHOLD: u64 = 1000;
/// Above this order every candidate comparison is made in fixed point.
pub const HP_MANDATORY_ABOVE: u64 = 1_000_000_000;
/// Binary64 values closer than this (relative) are re-compared in fixed point.
pub const TIE_REL_F64: f64 = 1e-12;
/// Fixed-point values closer than `10^-TIE_DIGITS_HP` (relative) are ties.
pub const TIE_DIGITS_HP: u32 = 25;
/// Largest order accepted by the unpruned search.
pub const EXHAUSTIVE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub prune: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { prune: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub n: u64,
    pub best: FamilyParams,
    pub abc_value: f64,
    pub abc_value_hp: Fixed,
    /// All members tied with `best` in fixed point, `best` included; empty
    /// when the minimum is unique.
    pub ties: Vec<FamilyParams>,
    /// Number of candidates compared in fixed point.
    pub shortlist: usize,
    pub nodes_explored: u64,
    pub characterized: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("no family member has order {0}")]
    Infeasible(u64),
    #[error("order {0} exceeds the unpruned search limit {EXHAUSTIVE_LIMIT}")]
    TooLargeForExhaustive(u64),
}

struct Shortlist {
    tol: f64,
    best: f64,
    items: Vec<(f64, FamilyParams)>,
    explored: u64,
}

impl Shortlist {
    fn new(tol: f64) -> Self {
        Shortlist { tol, best: f64::INFINITY, items: Vec::new(), explored: 0 }
    }

    fn cutoff(&self) -> f64 {
        self.best * (1.0 + self.tol)
    }

    fn offer(&mut self, v: f64, p: FamilyParams) {
        self.explored += 1;
        if v < self.best {
            self.best = v;
            let cut = self.cutoff();
            self.items.retain(|&(w, _)| w <= cut);
        }
        if v <= self.cutoff() {
            self.items.push((v, p));
        }
    }

    fn merge(mut self, other: Shortlist) -> Shortlist {
        self.explored += other.explored;
        self.best = self.best.min(other.best);
        let cut = self.cutoff();
        self.items.extend(other.items);
        self.items.retain(|&(w, _)| w <= cut);
        self
    }
}

pub fn solve(n: u64) -> Result<SolveResult, SolveError> {
    solve_with(n, SolveOptions::default())
}

pub fn solve_with(n: u64, opts: SolveOptions) -> Result<SolveResult, SolveError> {
    if !opts.prune && n > EXHAUSTIVE_LIMIT {
        return Err(SolveError::TooLargeForExhaustive(n));
    }
    let tol = if n > HP_MANDATORY_ABOVE { f64::INFINITY } else { TIE_REL_F64 };
    let list = Cell::all()
        .into_par_iter()
        .map(|cell| {
            let mut s = Shortlist::new(tol);
            for_each_candidate(cell, n, opts.prune, |p| s.offer(closed_form_abc(&p), p));
            s
        })
        .reduce(|| Shortlist::new(tol), Shortlist::merge);
    if list.items.is_empty() {
        return Err(SolveError::Infeasible(n));
    }
    let explored = list.explored;
    let (best, hp, ties, shortlist) = pick(list.items);
    Ok(SolveResult {
        n,
        best,
        abc_value: closed_form_abc(&best),
        abc_value_hp: hp,
        ties,
        shortlist,
        nodes_explored: explored,
        characterized: n >= VALIDITY_THRESHOLD,
    })
}

/// Resolves a binary64 shortlist in fixed point; exact ties go to the
/// lexicographically smallest key.
fn pick(items: Vec<(f64, FamilyParams)>) -> (FamilyParams, Fixed, Vec<FamilyParams>, usize) {
    let count = items.len();
    if count == 1 {
        let p = items[0].1;
        return (p, closed_form_abc_hp(&p), Vec::new(), 1);
    }
    let scored: Vec<(Fixed, FamilyParams)> =
        items.into_iter().map(|(_, p)| (closed_form_abc_hp(&p), p)).collect();
    let min = scored.iter().map(|(v, _)| v).min().expect("nonempty").clone();
    let mut tied: Vec<(Fixed, FamilyParams)> =
        scored.into_iter().filter(|(v, _)| v.rel_close(&min, TIE_DIGITS_HP)).collect();
    tied.sort_by_key(|(_, p)| p.tie_key());
    let (hp, best) = tied[0].clone();
    let ties = if tied.len() > 1 { tied.into_iter().map(|(_, p)| p).collect() } else { Vec::new() };
    (best, hp, ties, count)
}

/// One result per order in `[lo, hi]`, in ascending order.
pub fn solve_range(lo: u64, hi: u64) -> Vec<Result<SolveResult, SolveError>> {
    (lo..=hi).into_par_iter().map(solve).collect()
}
