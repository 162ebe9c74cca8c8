//! Trees, the ABC edge weight and the summation helpers shared by the
//! rest of the workspace.
//!
//! The ABC index of a tree is the sum over its edges `uv` of
//! `sqrt((d(u) + d(v) - 2) / (d(u) d(v)))`.

pub mod hp;
pub mod sum;
pub mod tree;
pub mod weight;

pub use hp::Fixed;
pub use sum::{compensated_sum, NeumaierSum};
pub use tree::{abc_index, abc_index_hp, apply_switch, SwitchError, Tree, TreeError};
pub use weight::{f, weight, DomainError};
