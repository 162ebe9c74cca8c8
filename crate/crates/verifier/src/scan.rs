use std::sync::Arc;

use rayon::prelude::*;

use crate::expr::delta_abc;
use crate::params::{Form, TransformId, TransformParams};
use crate::report::{RowReport, ScanReport, TailResult, Violation, MAX_STORED_VIOLATIONS};
use crate::tables::{builtin_tables, check_nk, BoundRow, BoundTable, CapTable, Tables};

/// Largest root degree probed when searching for a crossover.
pub const CROSSOVER_CAP: i64 = 1 << 40;

const CHUNK: i64 = 4096;

/// Grid coordinate a scan runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Dv,
    Z,
    DzParent,
}

impl Axis {
    pub fn set(self, p: TransformParams, v: i64) -> TransformParams {
        match self {
            Axis::Dv => p.dv(v),
            Axis::Z => p.z(v),
            Axis::DzParent => p.dz_parent(v),
        }
    }
}

/// Fixed parameters evaluated for every axis value in `lo..=hi`.
#[derive(Debug, Clone)]
pub struct Segment {
    pub base: TransformParams,
    pub lo: i64,
    pub hi: i64,
}

type Profiles = Arc<dyn Fn(i64) -> Vec<TransformParams> + Send + Sync>;

#[derive(Debug, Clone)]
pub struct Tail {
    pub form: Form,
    pub point: TransformParams,
    pub at: i64,
    pub transcribed: bool,
}

/// One row of a negativity scan: a finite grid plus monotone-bound checks
/// beyond it.
#[derive(Clone)]
pub struct Case {
    pub id: TransformId,
    pub label: String,
    pub form: Form,
    pub axis: Axis,
    pub segments: Vec<Segment>,
    /// Grid whose parameter profiles depend on the axis value; the worst
    /// profile counts at each point.
    pub dynamic: Option<(i64, i64, Profiles)>,
    pub tails: Vec<Tail>,
    pub crossover: Option<i64>,
    pub transcribed_crossover: Option<i64>,
    pub notes: Vec<String>,
    pub pre_violations: Vec<Violation>,
}

impl Case {
    pub fn new(id: TransformId, label: impl Into<String>, form: Form) -> Self {
        Case {
            id,
            label: label.into(),
            form,
            axis: Axis::Dv,
            segments: Vec::new(),
            dynamic: None,
            tails: Vec::new(),
            crossover: None,
            transcribed_crossover: None,
            notes: Vec::new(),
            pre_violations: Vec::new(),
        }
    }

    fn axis(mut self, axis: Axis) -> Self {
        self.axis = axis;
        self
    }

    fn grid(mut self, base: TransformParams, lo: i64, hi: i64) -> Self {
        if lo <= hi {
            self.segments.push(Segment { base, lo, hi });
        }
        self
    }

    fn tail(mut self, form: Form, base: TransformParams, at: i64) -> Self {
        let point = self.axis.set(base, at);
        self.tails.push(Tail { form, point, at, transcribed: false });
        self
    }

    fn printed_tail(mut self, form: Form, base: TransformParams, at: i64) -> Self {
        let point = self.axis.set(base, at);
        self.tails.push(Tail { form, point, at, transcribed: true });
        self
    }

    /// Evaluates the grid and tails. Deterministic for a given case.
    pub fn run(&self) -> RowReport {
        let mut tasks: Vec<(usize, i64, i64)> = Vec::new();
        for (i, s) in self.segments.iter().enumerate() {
            let mut a = s.lo;
            while a <= s.hi {
                let b = (a + CHUNK - 1).min(s.hi);
                tasks.push((i, a, b));
                a = b + 1;
            }
        }
        let dyn_tasks: Vec<(i64, i64)> = match &self.dynamic {
            Some((lo, hi, _)) => {
                let mut v = Vec::new();
                let mut a = *lo;
                while a <= *hi {
                    let b = (a + CHUNK / 8 - 1).min(*hi);
                    v.push((a, b));
                    a = b + 1;
                }
                v
            }
            None => Vec::new(),
        };
        let fixed = tasks
            .par_iter()
            .map(|&(i, a, b)| {
                let mut acc = Acc::default();
                let base = self.segments[i].base;
                for v in a..=b {
                    acc.eval(self.id, self.form, self.axis.set(base, v));
                }
                acc
            })
            .reduce(Acc::default, Acc::merge);
        let dynamic = dyn_tasks
            .par_iter()
            .map(|&(a, b)| {
                let mut acc = Acc::default();
                let gen = &self.dynamic.as_ref().expect("dynamic grid").2;
                for v in a..=b {
                    let profiles = gen(v);
                    let mut best: Option<(f64, TransformParams)> = None;
                    let mut local = Acc::default();
                    for p in profiles {
                        let p = self.axis.set(p, v);
                        match delta_abc(self.id, self.form, &p) {
                            Ok(val) if val.is_finite() => {
                                if best.map_or(true, |(b, _)| val > b) {
                                    best = Some((val, p));
                                }
                            }
                            Ok(val) => local.violate(self.form, p, val, "non-finite value".into()),
                            Err(e) => local.violate(self.form, p, f64::NAN, e.to_string()),
                        }
                    }
                    if let Some((val, p)) = best {
                        local.record(self.form, p, val);
                    }
                    acc = acc.merge(local);
                }
                acc
            })
            .reduce(Acc::default, Acc::merge);
        let mut acc = fixed.merge(dynamic);
        let mut tails = Vec::new();
        for t in &self.tails {
            let mut one = Acc::default();
            one.eval(self.id, t.form, t.point);
            tails.push(TailResult { form: t.form, at: t.at, value: one.worst, transcribed: t.transcribed });
            acc = acc.merge(one);
        }
        acc.count += self.pre_violations.len() as u64;
        let mut violations = self.pre_violations.clone();
        violations.extend(acc.violations);
        violations.truncate(MAX_STORED_VIOLATIONS);
        let lo = self.segments.iter().map(|s| s.lo).chain(self.dynamic.as_ref().map(|d| d.0)).min();
        let hi = self.segments.iter().map(|s| s.hi).chain(self.dynamic.as_ref().map(|d| d.1)).max();
        RowReport {
            id: self.id,
            label: self.label.clone(),
            grid_form: self.form,
            grid: lo.zip(hi),
            points: acc.points,
            worst_value: acc.worst,
            worst_params: acc.worst_params,
            crossover: self.crossover,
            transcribed_crossover: self.transcribed_crossover,
            tails,
            violation_count: acc.count,
            violations,
            notes: self.notes.clone(),
        }
    }
}

#[derive(Debug, Clone)]
struct Acc {
    points: u64,
    worst: f64,
    worst_params: Option<TransformParams>,
    count: u64,
    violations: Vec<Violation>,
}

impl Default for Acc {
    fn default() -> Self {
        Acc { points: 0, worst: f64::NEG_INFINITY, worst_params: None, count: 0, violations: Vec::new() }
    }
}

impl Acc {
    fn eval(&mut self, id: TransformId, form: Form, p: TransformParams) {
        match delta_abc(id, form, &p) {
            Ok(v) if v.is_finite() => self.record(form, p, v),
            Ok(v) => self.violate(form, p, v, "non-finite value".into()),
            Err(e) => self.violate(form, p, f64::NAN, e.to_string()),
        }
    }

    fn record(&mut self, form: Form, p: TransformParams, v: f64) {
        self.points += 1;
        if v > self.worst {
            self.worst = v;
            self.worst_params = Some(p);
        }
        if v >= 0.0 {
            self.violate(form, p, v, "nonnegative".into());
        }
    }

    fn violate(&mut self, form: Form, params: TransformParams, value: f64, reason: String) {
        self.count += 1;
        if self.violations.len() < MAX_STORED_VIOLATIONS {
            self.violations.push(Violation { form, params, value, reason });
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.points += other.points;
        if other.worst > self.worst {
            self.worst = other.worst;
            self.worst_params = other.worst_params;
        }
        self.count += other.count;
        let room = MAX_STORED_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
        self
    }
}

/// Smallest root degree `>= start` at which `form` is negative, assuming the
/// form is nonincreasing in `d(v)`. `None` when no such degree exists below
/// [`CROSSOVER_CAP`].
pub fn crossover(id: TransformId, form: Form, base: &TransformParams, start: i64) -> Option<i64> {
    let neg = |d: i64| delta_abc(id, form, &base.dv(d)).map(|v| v < 0.0).unwrap_or(false);
    if neg(start) {
        return Some(start);
    }
    let (mut lo, mut hi) = (start, start.max(1) * 2);
    while !neg(hi) {
        lo = hi;
        hi *= 2;
        if hi > CROSSOVER_CAP {
            return None;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if neg(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

fn run_cases(id: TransformId, cases: Vec<Case>, notes: Vec<String>) -> ScanReport {
    ScanReport { id, rows: cases.iter().map(Case::run).collect(), notes }
}

/// Scans one of the bound tables: exact-side bound on a finite grid from
/// the row's lowest degree to the crossover, then the monotone bound at the
/// crossover (and at the printed crossover, where one exists).
pub fn scan_table(table: &BoundTable) -> ScanReport {
    let cases: Vec<Case> = table.rows.iter().map(|row| table_case(table, row)).collect();
    let mut notes = vec![format!("table {}", table.name)];
    for r in &table.rows {
        if let Some((a, b)) = r.printed {
            notes.push(format!(
                "row z={} x={} k={}: printed counts n_{}={a}, n_{}={b} replaced by {}, {}",
                r.z,
                r.x,
                r.k,
                r.k,
                r.k - 1,
                r.n_k,
                r.n_km1
            ));
        }
    }
    run_cases(table.transform, cases, notes)
}

fn table_case(table: &BoundTable, row: &BoundRow) -> Case {
    let id = table.transform;
    let base = TransformParams::new().z(row.z).x(row.x).k(row.k).n_k(row.n_k).n_km1(row.n_km1);
    let label = format!("{} z={} x={} k={} ({}/{})", table.name, row.z, row.x, row.k, row.n_k, row.n_km1);
    let mut case = Case::new(id, label, Form::SurrogateA);
    if let Err(e) = check_nk(row.z, row.x, row.k, row.n_k, row.n_km1, table.variant) {
        case.pre_violations.push(Violation {
            form: Form::Exact,
            params: base,
            value: f64::NAN,
            reason: format!("consistency: {e}"),
        });
        return case;
    }
    let start = row.start();
    let c = crossover(id, Form::SurrogateB, &base, start);
    case.crossover = c;
    case.transcribed_crossover = row.crossover;
    match c {
        Some(c) => {
            let end = row.crossover.map_or(c, |t| t.max(c));
            case = case.grid(base, start, end - 1).tail(Form::SurrogateB, base, c);
            if let Some(t) = row.crossover {
                case = case.printed_tail(Form::SurrogateB, base, t);
            }
        }
        None => case.pre_violations.push(Violation {
            form: Form::SurrogateB,
            params: base.dv(CROSSOVER_CAP),
            value: f64::NAN,
            reason: "monotone bound never negative".into(),
        }),
    }
    case
}

fn p() -> TransformParams {
    TransformParams::new()
}

fn t2_cases() -> Vec<Case> {
    let mut c = Case::new(TransformId::T2, "z=216..431, d(w)=16..132, x=1..4", Form::SurrogateA).axis(Axis::Z);
    for w in 16..=132 {
        for x in 1..=4 {
            c = c.grid(p().dw(w).x(x), 216, 431);
        }
    }
    vec![c]
}

fn t3_cases() -> Vec<Case> {
    (15..=215)
        .map(|z| {
            let mut c = Case::new(TransformId::T3, format!("z={z}, x=1..4"), Form::SurrogateA);
            for x in 1..=4 {
                c = c.grid(p().z(z).x(x), z + 1, 299).tail(Form::SurrogateB, p().z(z).x(x), 300);
            }
            c
        })
        .collect()
}

fn t4_cases() -> Vec<Case> {
    let id = TransformId::T4;
    let a = p().z(53).x(216).k(52).n_k(74).n_km1(149).n3(882).nb(54);
    let far = p().z(53).x(179).k(52).n_k(0).n_km1(186);
    vec![
        Case::new(id, "z=53 x=216 k=52 n3=882, rest at 54", Form::Exact).grid(a, 1228, 1272),
        Case::new(id, "z=53 x=216 k=52 n3=882 t=48, rest at 54", Form::Exact).grid(a.t(48), 1229, 1273),
        Case::new(id, "z=54 x=130 k=52 at d(v)=1228", Form::SurrogateA)
            .grid(p().z(54).x(130).k(52).n_k(32).n_km1(105), 1228, 1228),
        Case::new(id, "z=52 x=358 k=52, rest at 53", Form::Exact)
            .grid(p().z(52).x(358).k(52).n_k(0).n_km1(365).nb(53), 2956, 3241),
        Case::new(id, "z=52 x=358 k=52, rest at 52", Form::Exact)
            .grid(p().z(52).x(358).k(52).n_k(0).n_km1(365).nb(52), 2956, 3185),
        Case::new(id, "z=53 x=179 k=52, rest at 53", Form::Exact)
            .grid(far.nb(53), 3242, 699_999)
            .tail(Form::SurrogateB, far, 700_000),
    ]
}

fn t5_cases() -> Vec<Case> {
    let id = TransformId::T5;
    let big = p().z(51).x(719).k(52).n_k(358).n_km1(354);
    let c = crossover(id, Form::SurrogateB, &big, 3242);
    let mut tail = Case::new(id, "z=51 x=719 k=52, d(v) >= 3242", Form::SurrogateA);
    tail.crossover = c;
    if let Some(c) = c {
        tail = tail.grid(big, 3242, c - 1).tail(Form::SurrogateB, big, c);
    }
    vec![
        Case::new(id, "z=50 x=124 k=53", Form::SurrogateA).grid(p().z(50).x(124).k(53).n_k(117).n_km1(0), 2956, 3241),
        tail,
        Case::new(id, "z=50 x=222 k=52 n4=1", Form::Exact)
            .grid(p().z(50).x(222).k(52).n_k(136).n_km1(79).n3(0).n4(1).nb(52), 1228, 1357),
        Case::new(id, "z=49 x=95 k=53 n4=1", Form::Exact)
            .grid(p().z(49).x(95).k(53).n_k(80).n_km1(8).n3(0).n4(1).nb(51), 1228, 1357),
    ]
}

/// Upper end (exclusive) of the T6 grid for largest D-branch size `k`.
pub fn t6_grid_end(k: i64) -> i64 {
    if k >= 52 {
        5300
    } else {
        3400
    }
}

/// Vertices of the polytope of admissible neighbour profiles for T6 at
/// root degree `d`. The expression is linear in the counts, so its maximum
/// is attained at one of them.
pub fn t6_profiles(tables: &Tables, k: i64, x: i64, with_b2: bool, d: i64) -> Vec<TransformParams> {
    let n4 = if with_b2 { 0 } else { 4 };
    let base = p().x(x).k(k).n4(n4);
    if (50..=52).contains(&k) {
        return vec![base.n_k(d - x).n_km1(0).nb(k + 1)];
    }
    let extra = i64::from(with_b2);
    let r = d - x - extra;
    let (nb, a_cap, b_cap) = if k == 53 {
        (53, tables.d_branch_cap(53).unwrap_or(0), 0)
    } else {
        let b = if k - 1 < 15 { 0 } else { tables.d_branch_cap(k - 1).unwrap_or(0) };
        (4, tables.d_branch_cap(k).unwrap_or(0), b)
    };
    let mut out = Vec::with_capacity(5);
    let mut push = |a: i64, b: i64| {
        if a >= 0 && b >= 0 && a + b <= r {
            let mut q = base.n_k(a).n_km1(b).nb(nb);
            if with_b2 {
                q = q.t(k);
            }
            out.push(q);
        }
    };
    push(0, 0);
    push(a_cap.min(r), 0);
    push(0, b_cap.min(r));
    push(a_cap, b_cap.min(r - a_cap));
    push(a_cap.min(r - b_cap), b_cap);
    out
}

/// Largest value of the T6 change over the grid for fixed `x`.
pub fn t6_worst(tables: &Tables, k: i64, x: i64, with_b2: bool) -> f64 {
    (x..t6_grid_end(k))
        .into_par_iter()
        .map(|d| {
            t6_profiles(tables, k, x, with_b2, d)
                .into_iter()
                .filter_map(|q| delta_abc(TransformId::T6, Form::Exact, &q.dv(d)).ok())
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .reduce(|| f64::NEG_INFINITY, f64::max)
}

/// Smallest `x` such that the T6 change is negative on the grid for every
/// `x' >= x` down to the first failure below `from`.
pub fn t6_sharp_x(tables: &Tables, k: i64, with_b2: bool, from: i64) -> i64 {
    let mut x = from;
    while x > 366 && t6_worst(tables, k, x - 1, with_b2) < 0.0 {
        x -= 1;
    }
    x
}

fn t6_cap_cases(tables: &Tables, cap: &CapTable) -> Vec<Case> {
    cap.rows
        .iter()
        .map(|row| {
            let k = row.k;
            let x = row.max_b3 + 1;
            let with_b2 = cap.with_b2;
            let t = Arc::new(tables.clone());
            let label = format!("{}: {} -> {}", cap.name, row.label(), row.max_b3);
            let mut c = Case::new(TransformId::T6, label, Form::Exact);
            c.dynamic = Some((x, t6_grid_end(k) - 1, Arc::new(move |d| t6_profiles(&t, k, x, with_b2, d))));
            c
        })
        .collect()
}

fn t6_cases(tables: &Tables) -> Vec<Case> {
    let id = TransformId::T6;
    let mut cases = t6_cap_cases(tables, &tables.max_b3);
    cases.extend(t6_cap_cases(tables, &tables.max_b3_b2));
    let mut hi = Case::new(id, "x=400, d(v)=5300, 52 <= k <= 131", Form::SurrogateB);
    for k in 52..=131 {
        hi = hi.tail(Form::SurrogateB, p().x(400).k(k), 5300);
    }
    let mut lo = Case::new(id, "x=400, d(v)=3400, 15 <= k <= 51", Form::SurrogateB);
    for k in 15..=51 {
        lo = lo.tail(Form::SurrogateB, p().x(400).k(k), 3400);
    }
    cases.push(hi);
    cases.push(lo);
    cases
}

fn t7_cases() -> Vec<Case> {
    let id = TransformId::T7;
    let m = |z: i64, total: i64, nb: i64| p().z(z).n3(total - 1).n4(1).nb(nb);
    vec![
        Case::new(id, "z=53, n3+n4=882, rest at 54", Form::Exact).grid(m(53, 882, 54), 1228, 1272),
        Case::new(id, "z=54, n3+n4=882, rest at 54", Form::Exact).grid(m(54, 882, 54), 1228, 1272),
        Case::new(id, "z=53, n3+n4=919, rest at 53", Form::Exact).grid(m(53, 919, 53), 1228, 1279),
        Case::new(id, "z=52, n3+n4=919, rest at 53", Form::SurrogateB).tail(Form::SurrogateB, m(52, 919, 53), 1228),
        Case::new(id, "z=51, n3+n4=916, rest at 52", Form::Exact).grid(m(51, 916, 52), 1228, 3248),
        Case::new(id, "z=52, n3+n4=916, rest at 52", Form::SurrogateB).tail(Form::SurrogateB, m(52, 916, 52), 1228),
        Case::new(id, "z=51, n3+n4=908, rest at 51", Form::Exact).grid(m(51, 908, 51), 1228, 3248),
    ]
}

fn t8_cases() -> Vec<Case> {
    let id = TransformId::T8;
    let mut out = Vec::new();
    for (c, hi) in [(261, 4198), (0, 3989)] {
        let mut case = Case::new(id, format!("z=52, x=1..919, {c} at 54, rest at 53"), Form::Exact);
        for x in 1..=919 {
            let q = p().z(52).x(x).n_k(c);
            case = case.grid(q.nb(53), 2956, hi).tail(Form::SurrogateB, q, hi + 1);
        }
        out.push(case);
    }
    for z in [50, 51] {
        for nb in [z + 2, z + 1] {
            let mut case = Case::new(id, format!("z={z}, x=1..919, all at {nb}"), Form::Exact);
            for x in 1..=919 {
                case = case.grid(p().z(z).x(x).n_k(0).nb(nb), 2956, 3248);
            }
            out.push(case);
        }
    }
    out
}

/// Cases for odd `z` where the monotone bound is checked at `z+1` when
/// `z >= big`, and otherwise a grid `z+1..tail` precedes it.
fn odd_z_cases(id: TransformId, zs: std::ops::RangeInclusive<i64>, big: i64, tail: i64) -> Vec<Case> {
    zs.step_by(2)
        .map(|z| {
            let c = Case::new(id, format!("z={z}"), Form::SurrogateA);
            if z >= big {
                c.tail(Form::SurrogateB, p().z(z), z + 1)
            } else {
                c.grid(p().z(z), z + 1, tail - 1).tail(Form::SurrogateB, p().z(z), tail)
            }
        })
        .collect()
}

fn t10_cases() -> Vec<Case> {
    let mut c = Case::new(TransformId::T10, "16<=d(x)<=132, 20<=d(y)<=98, d(x)>=d(y)+6", Form::Exact).axis(Axis::DzParent);
    for dx in 16..=132 {
        for dy in 20..=98 {
            if dx >= dy + 6 {
                let q = p().dx(dx).dy(dy);
                c = c.grid(q, dx, 9999).tail(Form::SurrogateA, q, 10_000);
            }
        }
    }
    vec![c]
}

fn t11_cases() -> Vec<Case> {
    (43..=56)
        .map(|z| {
            let mut c = Case::new(TransformId::T11, format!("z={z}"), Form::SurrogateA);
            for k in (z - 9).max(34)..=z.min(50) {
                c = c.grid(p().z(z).k(k), 146, 2399).tail(Form::SurrogateB, p().z(z).k(k), 2400);
            }
            c
        })
        .collect()
}

fn t12_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for z in [51, 52] {
        for k in z - 5..=z {
            let x = 6 * z - k - 5;
            out.push(
                Case::new(TransformId::T12, format!("z={z} k={k} x={x}"), Form::SurrogateA)
                    .grid(p().z(z).k(k), x + 1, 4099)
                    .tail(Form::SurrogateB, p().z(z).k(k), 4100),
            );
        }
    }
    out
}

fn t14_cases() -> Vec<Case> {
    vec![Case::new(TransformId::T14, "d(v)=z+1, 15<=z<=46", Form::SurrogateA).axis(Axis::Z).grid(p(), 15, 46)]
}

fn t15_cases() -> Vec<Case> {
    (46..=57)
        .map(|z| {
            let x = z - 1;
            let mut c = Case::new(TransformId::T15, format!("z={z}"), Form::SurrogateA);
            for k in (z - 1).max(47)..=z + 1 {
                c = c.grid(p().z(z).k(k), x + 1, 555).tail(Form::SurrogateB, p().z(z).k(k), 556);
            }
            c
        })
        .collect()
}

/// Runs every scan attached to `id`, including the bound tables it owns.
pub fn scan_transform(id: TransformId) -> ScanReport {
    let tables = builtin_tables();
    use TransformId::*;
    match id {
        T4 | T5 => {
            let table = if id == T4 { &tables.large_z } else { &tables.small_z };
            let mut rep = scan_table(table);
            let extra = run_cases(id, if id == T4 { t4_cases() } else { t5_cases() }, Vec::new());
            rep.rows.extend(extra.rows);
            rep
        }
        T6 => {
            let mut rep = run_cases(id, t6_cases(&tables), Vec::new());
            for cap in tables.cap_tables() {
                for row in &cap.rows {
                    let sharp = t6_sharp_x(&tables, row.k, cap.with_b2, row.max_b3 + 1);
                    if sharp <= row.max_b3 {
                        rep.notes.push(format!(
                            "{}: {} negative already for x >= {}; printed maximum {} needs x >= {}",
                            cap.name,
                            row.label(),
                            sharp,
                            row.max_b3,
                            row.max_b3 + 1
                        ));
                    }
                }
            }
            rep
        }
        _ => {
            let cases = match id {
                T2 => t2_cases(),
                T3 => t3_cases(),
                T7 => t7_cases(),
                T8 => t8_cases(),
                T9 => odd_z_cases(T9, 99..=131, 113, 173),
                T10 => t10_cases(),
                T11 => t11_cases(),
                T12 => t12_cases(),
                T13 => odd_z_cases(T13, 75..=131, 117, 264),
                T14 => t14_cases(),
                T15 => t15_cases(),
                T4 | T5 | T6 => unreachable!(),
            };
            run_cases(id, cases, Vec::new())
        }
    }
}

pub fn scan_all() -> Vec<ScanReport> {
    TransformId::ALL.iter().map(|&id| scan_transform(id)).collect()
}
