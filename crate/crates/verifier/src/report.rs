use std::fmt::Write as _;

use serde::Serialize;

use crate::params::{Form, TransformId, TransformParams};

/// Largest number of violations stored per row; the rest are only counted.
pub const MAX_STORED_VIOLATIONS: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub form: Form,
    pub params: TransformParams,
    pub value: f64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailResult {
    pub form: Form,
    pub at: i64,
    pub value: f64,
    /// True when `at` is a transcribed crossover rather than a computed one.
    pub transcribed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowReport {
    pub id: TransformId,
    pub label: String,
    pub grid_form: Form,
    /// Smallest and largest grid coordinate evaluated.
    pub grid: Option<(i64, i64)>,
    pub points: u64,
    /// Largest value seen on the grid and tails; negative means the row holds.
    pub worst_value: f64,
    pub worst_params: Option<TransformParams>,
    pub crossover: Option<i64>,
    pub transcribed_crossover: Option<i64>,
    pub tails: Vec<TailResult>,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl RowReport {
    pub fn pass(&self) -> bool {
        self.violation_count == 0
    }

    /// Distance of the worst value below zero.
    pub fn margin(&self) -> f64 {
        -self.worst_value
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub id: TransformId,
    pub rows: Vec<RowReport>,
    pub notes: Vec<String>,
}

impl ScanReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(RowReport::pass)
    }

    pub fn violation_count(&self) -> u64 {
        self.rows.iter().map(|r| r.violation_count).sum()
    }

    pub fn points(&self) -> u64 {
        self.rows.iter().map(|r| r.points).sum()
    }

    /// Smallest margin over all rows.
    pub fn min_margin(&self) -> f64 {
        self.rows.iter().map(RowReport::margin).fold(f64::INFINITY, f64::min)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} {}: {} rows, {} points, {} violations, min margin {:.6e}",
            self.id,
            if self.pass() { "PASS" } else { "FAIL" },
            self.rows.len(),
            self.points(),
            self.violation_count(),
            self.min_margin()
        );
        for r in &self.rows {
            if !verbose && r.pass() {
                continue;
            }
            let grid = r.grid.map_or("-".to_string(), |(a, b)| format!("{a}..={b}"));
            let _ = write!(
                s,
                "  {:<4} {:<48} grid {:<14} worst {:+.6e}",
                if r.pass() { "ok" } else { "FAIL" },
                r.label,
                grid,
                r.worst_value
            );
            if let Some(c) = r.crossover {
                let _ = write!(s, " crossover {c}");
            }
            if let Some(c) = r.transcribed_crossover {
                let _ = write!(s, " (printed {c})");
            }
            s.push('\n');
            for v in &r.violations {
                let _ = writeln!(s, "       {} {}: {:+.6e} at {:?}", v.form, v.reason, v.value, v.params);
            }
            for n in &r.notes {
                let _ = writeln!(s, "       note: {n}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        s
    }
}
