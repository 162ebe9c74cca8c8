use serde::Serialize;

use crate::params::{TransformId, VerifyError};

mod data;

/// Which pair of linear identities fixes `n_k` and `n_(k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// `n_k + n_(k-1) = x + 7`, `k n_k + (k-1) n_(k-1) = xz - 1`.
    Plus7,
    /// `n_k + n_(k-1) = x - 7`, `k n_k + (k-1) n_(k-1) = xz + 1`.
    Minus7,
}

/// Returns `(n_k, n_km1)` for the given variant, or an error when either
/// count would be negative.
pub fn solve_nk(z: i64, x: i64, k: i64, variant: Variant) -> Result<(i64, i64), VerifyError> {
    let (n_k, n_km1) = match variant {
        Variant::Plus7 => {
            let n_k = x * (z - k + 1) - 7 * k + 6;
            (n_k, x + 7 - n_k)
        }
        Variant::Minus7 => {
            let n_k = x * (z - k + 1) + 7 * k - 6;
            (n_k, x - 7 - n_k)
        }
    };
    if n_k < 0 || n_km1 < 0 {
        return Err(VerifyError::NegativeCount { z, x, k });
    }
    Ok((n_k, n_km1))
}

/// Checks a row's counts against both defining identities.
pub fn check_nk(z: i64, x: i64, k: i64, n_k: i64, n_km1: i64, variant: Variant) -> Result<(), VerifyError> {
    let (sum, weighted) = match variant {
        Variant::Plus7 => (x + 7, x * z - 1),
        Variant::Minus7 => (x - 7, x * z + 1),
    };
    if n_k < 0 || n_km1 < 0 || n_k + n_km1 != sum || k * n_k + (k - 1) * n_km1 != weighted {
        return Err(VerifyError::Inconsistent { n_k, n_km1 });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub z: i64,
    pub x: i64,
    /// Lowest root degree covered; `None` means `d(v) >= x`.
    pub dv_threshold: Option<i64>,
    pub k: i64,
    pub n_k: i64,
    pub n_km1: i64,
    /// Degree at which the monotone bound is first negative, where a value
    /// was transcribed.
    pub crossover: Option<i64>,
    /// Counts as printed when they differ from the ones implied by the
    /// identities.
    pub printed: Option<(i64, i64)>,
}

impl BoundRow {
    pub fn start(&self) -> i64 {
        self.dv_threshold.unwrap_or(self.x).max(self.x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub name: &'static str,
    pub transform: TransformId,
    pub variant: Variant,
    pub rows: Vec<BoundRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapRow {
    /// Largest D-branch size; the root may also carry `D_(k-1)`.
    pub k: i64,
    /// Maximal number of B3-branches at the root.
    pub max_b3: i64,
}

impl CapRow {
    pub fn label(&self) -> String {
        if self.k <= 15 {
            format!("D_{}", self.k)
        } else {
            format!("D_{} and D_{}", self.k - 1, self.k)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapTable {
    pub name: &'static str,
    /// One D-branch carries a B2-branch.
    pub with_b2: bool,
    pub rows: Vec<CapRow>,
}

impl CapTable {
    pub fn get(&self, k: i64) -> Option<i64> {
        self.rows.iter().find(|r| r.k == k).map(|r| r.max_b3)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tables {
    pub large_z: BoundTable,
    pub small_z: BoundTable,
    pub max_b3: CapTable,
    pub max_b3_b2: CapTable,
}

impl Tables {
    pub fn bound_tables(&self) -> [&BoundTable; 2] {
        [&self.large_z, &self.small_z]
    }

    pub fn cap_tables(&self) -> [&CapTable; 2] {
        [&self.max_b3, &self.max_b3_b2]
    }

    /// Largest count of `D_k` branches compatible with a large-z or
    /// small-z row for `z = k`, `None` when no bound applies.
    pub fn d_branch_cap(&self, k: i64) -> Option<i64> {
        if k < 15 {
            return Some(0);
        }
        if k == 52 {
            return None;
        }
        self.large_z
            .rows
            .iter()
            .chain(&self.small_z.rows)
            .find(|r| r.z == k)
            .map(|r| r.x - 1)
    }
}

fn cap_table(name: &'static str, with_b2: bool, large: &[i64], small: &[i64]) -> CapTable {
    let mut rows: Vec<CapRow> = small
        .iter()
        .enumerate()
        .map(|(i, &m)| CapRow { k: 52 - i as i64, max_b3: m })
        .collect();
    rows.reverse();
    rows.extend(large.iter().enumerate().map(|(i, &m)| CapRow { k: 53 + i as i64, max_b3: m }));
    CapTable { name, with_b2, rows }
}

/// The transcribed tables. The small-z row for `z = 50` is stored with the
/// counts implied by its `(z, x, k)`; the printed counts are kept in
/// `printed`.
pub fn builtin_tables() -> Tables {
    let large_rows = data::LARGE_Z
        .iter()
        .map(|&(z, x, k, n_km1, n_k)| BoundRow {
            z,
            x,
            dv_threshold: None,
            k,
            n_k,
            n_km1,
            crossover: (z == 53).then_some(259_226),
            printed: None,
        })
        .collect();
    let small_rows = data::SMALL_Z
        .iter()
        .map(|&(z, x, thr, k, n_km1, n_k)| {
            let mut row = BoundRow {
                z,
                x,
                dv_threshold: thr,
                k,
                n_k,
                n_km1,
                crossover: (z == 51).then_some(3863),
                printed: None,
            };
            if check_nk(z, x, k, n_k, n_km1, Variant::Minus7).is_err() {
                if let Ok((a, b)) = solve_nk(z, x, k, Variant::Minus7) {
                    row.printed = Some((n_k, n_km1));
                    row.n_k = a;
                    row.n_km1 = b;
                }
            }
            row
        })
        .collect();
    Tables {
        large_z: BoundTable {
            name: "large-z",
            transform: TransformId::T4,
            variant: Variant::Plus7,
            rows: large_rows,
        },
        small_z: BoundTable {
            name: "small-z",
            transform: TransformId::T5,
            variant: Variant::Minus7,
            rows: small_rows,
        },
        max_b3: cap_table("maxB-2 / combin-small-z", false, &data::MAX_B3_LARGE, &data::MAX_B3_SMALL),
        max_b3_b2: cap_table("maxB-2-1 / combin-small-z-1", true, &data::MAX_B3_LARGE_B2, &data::MAX_B3_SMALL_B2),
    }
}
