//! Minimizes the closed-form ABC objective over every family member of a
//! given order.
//!
//! For a fixed shape (z, modified branch, root B3/B4 counts) the order
//! equation leaves `n_z (7z+1) + n_zp1 (7z+8) = R`. Since `7z+1` and `7z+8`
//! are coprime, the solutions form one arithmetic progression that is
//! walked directly. Known degree-threshold results restrict which shapes
//! can occur once the root degree is large; those restrictions are applied
//! as intervals on the progression index.

mod enumerate;
mod solve;

pub use enumerate::{enumerate_feasible, for_each_candidate, Cell, Extra, Progression};
pub use solve::{
    solve, solve_range, solve_with, SolveError, SolveOptions, SolveResult, EXHAUSTIVE_LIMIT,
    HP_MANDATORY_ABOVE, TIE_DIGITS_HP, TIE_REL_F64, VALIDITY_THRESHOLD,
};
