//! Change of the ABC index under the transformations T2..T15.
//!
//! Each transformation has an exact expression in the degrees around the
//! modified vertices and, where one exists, weaker bounds that are monotone
//! in the root degree `d(v)`. A negativity scan evaluates the exact form on
//! a finite degree grid and a monotone bound at the grid's end, which
//! certifies negativity for every larger degree.

pub mod expr;
pub mod params;
pub mod props;
pub mod report;
pub mod scan;
pub mod tables;

pub use expr::{delta_abc, forms_of};
pub use params::{Form, TransformId, TransformParams, VerifyError};
pub use props::{check_monotonicity, surrogate_dominance, surrogate_monotonicity, PropReport};
pub use report::{RowReport, ScanReport, Violation};
pub use scan::{crossover, scan_all, scan_table, scan_transform};
pub use tables::{builtin_tables, solve_nk, BoundRow, BoundTable, CapRow, CapTable, Tables, Variant};
