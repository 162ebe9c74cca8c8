use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TransformId {
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
}

impl TransformId {
    pub const ALL: [TransformId; 14] = [
        TransformId::T2,
        TransformId::T3,
        TransformId::T4,
        TransformId::T5,
        TransformId::T6,
        TransformId::T7,
        TransformId::T8,
        TransformId::T9,
        TransformId::T10,
        TransformId::T11,
        TransformId::T12,
        TransformId::T13,
        TransformId::T14,
        TransformId::T15,
    ];
}

impl fmt::Display for TransformId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TransformId {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TransformId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownTransform(s.to_string()))
    }
}

/// Which expression of a transformation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    Exact,
    /// Exact expression with unspecified neighbour degrees replaced by
    /// their worst case (or the degree-free bound where the exact form has
    /// no neighbour sum).
    SurrogateA,
    /// Bound that is nonincreasing in the root degree.
    SurrogateB,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Exact => "exact",
            Form::SurrogateA => "surrogate_A",
            Form::SurrogateB => "surrogate_B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{id} needs field `{field}`")]
    MissingField { id: TransformId, field: &'static str },
    #[error("{id} has no {form} form")]
    FormUnavailable { id: TransformId, form: Form },
    #[error("unknown transformation `{0}`")]
    UnknownTransform(String),
    #[error("parameters out of range for {id}: {why}")]
    OutOfRange { id: TransformId, why: String },
    #[error("counts ({n_k}, {n_km1}) do not satisfy the branch identities")]
    Inconsistent { n_k: i64, n_km1: i64 },
    #[error("negative branch count for z={z}, x={x}, k={k}")]
    NegativeCount { z: i64, x: i64, k: i64 },
}

/// Free variables of a transformation's expression. Fields an expression
/// does not use stay `None`.
///
/// Neighbour profiles: around the vertex whose degree changes, `n3`
/// neighbours have degree 4, `n4` have degree 5, `n_k` have degree `k+1`,
/// `n_km1` have degree `k`, one has degree `t+1` when `t` is set, and the
/// rest have degree `neighbor_degree_bound`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dv: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_km1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n3: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n4: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dw: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dx: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dy: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dz_parent: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighbor_degree_bound: Option<i64>,
}

macro_rules! setters {
    ($($name:ident),*) => {
        $(
            pub fn $name(mut self, v: i64) -> Self {
                self.$name = Some(v);
                self
            }
        )*
    };
}

impl TransformParams {
    pub fn new() -> Self {
        Self::default()
    }

    setters!(dv, z, x, k, n_k, n_km1, n3, n4, t, dw, dx, dy, dz_parent);

    pub fn nb(mut self, v: i64) -> Self {
        self.neighbor_degree_bound = Some(v);
        self
    }

    pub fn without_t(mut self) -> Self {
        self.t = None;
        self
    }
}
