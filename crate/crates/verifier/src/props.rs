use minabc_core::weight;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::expr::{delta_abc, forms_of};
use crate::params::{Form, TransformId, TransformParams};
use crate::scan::Axis;
use crate::tables::builtin_tables;

/// Slack allowed for rounding in the sampled comparisons.
pub const PROP_TOL: f64 = 1e-12;

const MAX_STORED: usize = 16;
const CHAIN: usize = 8;
const SAMPLES_PER_TASK: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropReport {
    pub name: String,
    pub samples: u64,
    pub checks: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
}

impl PropReport {
    fn new(name: impl Into<String>) -> Self {
        PropReport { name: name.into(), samples: 0, checks: 0, violation_count: 0, violations: Vec::new() }
    }

    pub fn pass(&self) -> bool {
        self.violation_count == 0 && self.checks > 0
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_STORED {
            self.violations.push(msg());
        }
    }

    fn merge(mut self, o: PropReport) -> PropReport {
        self.samples += o.samples;
        self.checks += o.checks;
        self.violation_count += o.violation_count;
        let room = MAX_STORED.saturating_sub(self.violations.len());
        self.violations.extend(o.violations.into_iter().take(room));
        self
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} {}: {} samples, {} checks, {} violations\n",
            self.name,
            if self.pass() { "PASS" } else { "FAIL" },
            self.samples,
            self.checks,
            self.violation_count
        );
        for v in &self.violations {
            s.push_str("  ");
            s.push_str(v);
            s.push('\n');
        }
        s
    }
}

/// Splits `samples` into tasks with seeds derived from `seed`, runs them in
/// parallel and merges in task order.
fn sampled<F>(name: &str, samples: u64, seed: u64, body: F) -> PropReport
where
    F: Fn(&mut StdRng, &mut PropReport) + Sync,
{
    let tasks = samples.div_ceil(SAMPLES_PER_TASK);
    (0..tasks)
        .into_par_iter()
        .map(|t| {
            let mut rng = StdRng::seed_from_u64(seed ^ t.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut rep = PropReport::new(name);
            let n = SAMPLES_PER_TASK.min(samples - t * SAMPLES_PER_TASK);
            for _ in 0..n {
                rep.samples += 1;
                body(&mut rng, &mut rep);
            }
            rep
        })
        .reduce(|| PropReport::new(name), PropReport::merge)
}

fn increasing_chain(rng: &mut StdRng, start: f64, max_step: f64) -> [f64; CHAIN] {
    let mut out = [start; CHAIN];
    for i in 1..CHAIN {
        out[i] = out[i - 1] + rng.gen_range(0.0..max_step);
    }
    out
}

fn check_chain(rep: &mut PropReport, vals: &[f64], rising: bool, what: &str, at: &[f64]) {
    for i in 1..vals.len() {
        rep.checks += 1;
        let step = vals[i] - vals[i - 1];
        let ok = if rising { step >= -PROP_TOL } else { step <= PROP_TOL };
        if !ok {
            rep.fail(|| format!("{what}: {} -> {} at {:?}", vals[i - 1], vals[i], &at[i - 1..=i]));
        }
    }
}

/// Samples `-f(x,y) + f(x+dx, y-dy)` and `-f(x,y) + f(x-dx, y+dy)` along
/// increasing chains in `x` and in `y` and checks the directions of
/// monotonicity: the first rises in `x` and falls in `y`, the second the
/// other way round.
pub fn check_monotonicity(samples: u64, seed: u64) -> PropReport {
    sampled("f-monotonicity", samples, seed, |rng, rep| {
        let x = rng.gen_range(2.0..300.0);
        let y = rng.gen_range(2.0..300.0);
        let step = rng.gen_range(0.01..40.0);

        let dx = rng.gen_range(0.0..100.0);
        let dy = rng.gen_range(0.0..y);
        let e = |x: f64, y: f64| -weight(x, y) + weight(x + dx, y - dy);
        let xs = increasing_chain(rng, x, step);
        let v: Vec<f64> = xs.iter().map(|&a| e(a, y)).collect();
        check_chain(rep, &v, true, "x -> -f(x,y)+f(x+dx,y-dy)", &xs);
        let ys = increasing_chain(rng, y, step);
        let v: Vec<f64> = ys.iter().map(|&b| e(x, b)).collect();
        check_chain(rep, &v, false, "y -> -f(x,y)+f(x+dx,y-dy)", &ys);

        let dx = rng.gen_range(0.0..x);
        let dy = rng.gen_range(0.0..100.0);
        let e = |x: f64, y: f64| -weight(x, y) + weight(x - dx, y + dy);
        let xs = increasing_chain(rng, x, step);
        let v: Vec<f64> = xs.iter().map(|&a| e(a, y)).collect();
        check_chain(rep, &v, false, "x -> -f(x,y)+f(x-dx,y+dy)", &xs);
        let ys = increasing_chain(rng, y, step);
        let v: Vec<f64> = ys.iter().map(|&b| e(x, b)).collect();
        check_chain(rep, &v, true, "y -> -f(x,y)+f(x-dx,y+dy)", &ys);
    })
}

/// Random parameters inside the domain each bound is derived for, with the
/// axis left unset, plus the axis range to sample from.
fn sample_params(id: TransformId, rng: &mut StdRng) -> (TransformParams, Axis, i64, i64) {
    use TransformId::*;
    let p = TransformParams::new();
    let odd = |rng: &mut StdRng, lo: i64, hi: i64| lo + 2 * rng.gen_range(0..=(hi - lo) / 2);
    match id {
        T2 => {
            let z = rng.gen_range(216..=400);
            let q = p.z(z).x(rng.gen_range(1..=4)).dw(rng.gen_range(16..=132));
            (q, Axis::Dv, z + 1, 20_000)
        }
        T3 => {
            let z = rng.gen_range(15..=215);
            let x = rng.gen_range(1..=4);
            let q = p.z(z).x(x).n4(rng.gen_range(0..=4 - x)).nb(rng.gen_range(16..=133));
            (q, Axis::Dv, z + 1, 20_000)
        }
        T4 => {
            let t = builtin_tables();
            let r = &t.large_z.rows[rng.gen_range(0..t.large_z.rows.len())];
            let mut q = p.z(r.z).x(r.x).k(r.k).n_k(r.n_k).n_km1(r.n_km1).nb(rng.gen_range(4..=r.z + 2));
            q = q.n3(rng.gen_range(0..=30));
            if rng.gen_bool(0.5) {
                q = q.t(rng.gen_range(r.z - 5..=r.z));
            }
            (q, Axis::Dv, r.x + 32, 400_000)
        }
        T5 => {
            let t = builtin_tables();
            let r = &t.small_z.rows[rng.gen_range(0..t.small_z.rows.len())];
            let q = p
                .z(r.z)
                .x(r.x)
                .k(r.k)
                .n_k(r.n_k)
                .n_km1(r.n_km1)
                .n3(rng.gen_range(0..=30))
                .n4(rng.gen_range(0..=4))
                .nb(rng.gen_range(4..=r.z + 2));
            (q, Axis::Dv, r.start().max(r.x + 35), 50_000)
        }
        T6 => {
            let k = rng.gen_range(15..=131);
            let x = rng.gen_range(400..=919);
            let q = p
                .x(x)
                .k(k)
                .n_k(rng.gen_range(0..=200))
                .n_km1(rng.gen_range(0..=200))
                .n4(rng.gen_range(0..=4))
                .nb(rng.gen_range(4..=k + 1));
            let q = if rng.gen_bool(0.5) { q.t(rng.gen_range((k - 5).max(3)..=k)) } else { q };
            (q, Axis::Dv, x + 401, 30_000)
        }
        T7 => {
            let z = rng.gen_range(50..=54);
            let n4 = rng.gen_range(1..=4);
            let n3 = rng.gen_range(0..=919 - n4);
            let q = p.z(z).n3(n3).n4(n4).nb(rng.gen_range(z..=z + 1));
            (q, Axis::Dv, (2 * z - 3 + n3 + n4).max(1228), 20_000)
        }
        T8 => {
            let z = rng.gen_range(50..=52);
            let x = rng.gen_range(1..=919);
            let c = rng.gen_range(0..=261);
            let q = p.z(z).x(x).n_k(c).nb(rng.gen_range(4..=z + 1));
            (q, Axis::Dv, (2 * x + c).max(2956), 20_000)
        }
        T9 => {
            let z = odd(rng, 99, 131);
            (p.z(z).nb(rng.gen_range(4..=133)), Axis::Dv, z + 1, 20_000)
        }
        T10 => {
            let dy = rng.gen_range(20..=98);
            let dx = rng.gen_range(dy + 6..=132.max(dy + 6));
            (p.dx(dx).dy(dy), Axis::DzParent, dx, 200_000)
        }
        T11 => {
            let z = rng.gen_range(43..=56);
            let k = rng.gen_range((z - 9).max(34)..=z.min(50));
            (p.z(z).k(k).nb(rng.gen_range(4..=133)), Axis::Dv, 146, 20_000)
        }
        T12 => {
            let z = rng.gen_range(51..=52);
            let k = rng.gen_range(z - 5..=z);
            let x = 6 * z - k - 5;
            (p.z(z).k(k).nb(rng.gen_range(4..=133)), Axis::Dv, x + 1, 20_000)
        }
        T13 => {
            let z = odd(rng, 75, 131);
            (p.z(z).nb(rng.gen_range(4..=133)), Axis::Dv, z + 1, 20_000)
        }
        T14 => {
            let z = rng.gen_range(15..=46);
            (p.z(z), Axis::Dv, z + 1, 20_000)
        }
        T15 => {
            let z = rng.gen_range(46..=57);
            let k = rng.gen_range((z - 1).max(47)..=z + 1);
            (p.z(z).k(k).nb(rng.gen_range(4..=133)), Axis::Dv, z, 20_000)
        }
    }
}

/// Checks `surrogate(p) >= exact(p) - PROP_TOL` on random valid parameters
/// for every surrogate form of `id`.
pub fn surrogate_dominance(id: TransformId, samples: u64, seed: u64) -> PropReport {
    let forms: Vec<Form> = forms_of(id).iter().copied().filter(|&f| f != Form::Exact).collect();
    sampled(&format!("{id} dominance"), samples, seed, |rng, rep| {
        let (q, axis, lo, hi) = sample_params(id, rng);
        let v = rng.gen_range(lo..=hi);
        let q = axis.set(q, v);
        let Ok(exact) = delta_abc(id, Form::Exact, &q) else {
            rep.fail(|| format!("exact failed at {q:?}"));
            return;
        };
        for &form in &forms {
            rep.checks += 1;
            match delta_abc(id, form, &q) {
                Ok(s) if s >= exact - PROP_TOL => {}
                Ok(s) => rep.fail(|| format!("{form} {s} < exact {exact} at {q:?}")),
                Err(e) => rep.fail(|| format!("{form}: {e}")),
            }
        }
    })
}

/// Form of `id` that is nonincreasing along its scan axis, and that axis.
pub fn monotone_form(id: TransformId) -> (Form, Axis) {
    use TransformId::*;
    match id {
        T2 => (Form::SurrogateA, Axis::Z),
        T10 => (Form::SurrogateA, Axis::DzParent),
        T14 => (Form::Exact, Axis::Dv),
        _ => (Form::SurrogateB, Axis::Dv),
    }
}

/// Checks that the monotone form of `id` does not increase along random
/// increasing chains of its axis.
pub fn surrogate_monotonicity(id: TransformId, samples: u64, seed: u64) -> PropReport {
    let (form, axis) = monotone_form(id);
    sampled(&format!("{id} {form} monotonicity"), samples, seed, |rng, rep| {
        let (q, sample_axis, lo, hi) = sample_params(id, rng);
        let (q, lo, hi) = if axis == sample_axis {
            (q, lo, hi)
        } else {
            // T2: pick a root degree, walk z upwards from 216.
            let z0 = q.z.unwrap_or(216).min(300);
            (q.dv(rng.gen_range(1_000..=20_000)), z0, 999)
        };
        let step = ((hi - lo) / (4 * CHAIN as i64)).max(1);
        let mut at = [0f64; CHAIN];
        let mut vals = [0f64; CHAIN];
        let mut v = rng.gen_range(lo..=lo + step * 4);
        for i in 0..CHAIN {
            at[i] = v as f64;
            match delta_abc(id, form, &axis.set(q, v)) {
                Ok(x) => vals[i] = x,
                Err(e) => {
                    rep.fail(|| format!("{e}"));
                    return;
                }
            }
            v += rng.gen_range(1..=step);
        }
        check_chain(rep, &vals, false, &format!("{id} {form}"), &at);
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_shift_is_flat() {
        for &(x, y) in &[(2.0, 2.0), (7.0, 3.5), (100.0, 40.0)] {
            assert_eq!(-weight(x, y) + weight(x, y), 0.0);
        }
        let e = |x: f64| -weight(x, 2.0) + weight(x + 1.0, 2.0);
        assert!(e(2.0).abs() < 1e-15 && e(3.0).abs() < 1e-15);
    }

    #[test]
    fn small_runs_are_deterministic() {
        assert_eq!(check_monotonicity(3000, 7), check_monotonicity(3000, 7));
    }
}
