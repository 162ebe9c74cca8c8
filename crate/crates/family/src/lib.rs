//! Candidate trees built from a root vertex and D-branches.
//!
//! Every candidate has a root `v` whose children are centres of
//! `D_z`/`D_{z+1}` branches, optionally one modified D-branch (`D_z**`,
//! `D_{k1,1}^2` or `D_{k2,2}^2`), and optionally B3/B4 branches hanging
//! directly off the root. A `D_z` branch is a centre of degree `z + 1`
//! carrying `z` B3 branches; a `B_k` branch is a centre with `k` pendant
//! paths of length two.

mod params;
mod build;

pub use build::{materialize, MATERIALIZE_LIMIT};
pub use params::{
    closed_form_abc, closed_form_abc_hp, closed_form_terms, order_of, root_degree, summarize,
    FamilyParams, ParamError, StructureSummary, N3_N4_MAX, N4_MAX, Z_MAX, Z_MIN,
};
