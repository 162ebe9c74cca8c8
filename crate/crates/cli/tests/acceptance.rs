//! One PASS/FAIL line per acceptance criterion. Exits non-zero when any
//! criterion fails.

use std::time::{Duration, Instant};

use minabc_core::{abc_index, apply_switch, Tree};
use minabc_family::{closed_form_abc, materialize, order_of, FamilyParams};
use minabc_oracle::{brute_min_abc, enumerate_trees, family_exhaustive};
use minabc_solver::solve;
use minabc_verifier::{
    check_monotonicity, delta_abc, scan_all, surrogate_dominance, surrogate_monotonicity, Form, TransformId,
    TransformParams,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 20_240_601;
const OBJECTIVE_REL_TOL: f64 = 1e-9;
const ANCHOR_TOL: f64 = 1e-6;
const SWITCH_TOL: f64 = 1e-12;
const ORACLE_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let e = start.elapsed();
    if e <= limit {
        Ok(e)
    } else {
        Err(format!("took {e:.2?}, limit {limit:?}"))
    }
}

fn c1_published_orders() -> Outcome {
    let cases: [(u64, u32, u64, u64, u32, u32, u64); 7] = [
        (5047, 50, 7, 4, 164, 1, 10),
        (6956, 49, 1, 15, 191, 1, 10),
        (16443, 49, 0, 41, 293, 0, 10),
        (1014814, 51, 2594, 236, 3, 0, 10),
        (1142741, 51, 3035, 154, 0, 0, 10),
        (1257073, 51, 259, 3190, 0, 0, 10),
        (13_290_000_000_000_000, 51, 178, 36_410_958_903_935, 0, 0, 1),
    ];
    let mut slowest = Duration::ZERO;
    for (n, z, n_z, n_zp1, n3, n4, secs) in cases {
        let t = Instant::now();
        let p = solve(n).map_err(|e| format!("n={n}: {e}"))?.best;
        slowest = slowest.max(within(Duration::from_secs(secs), t).map_err(|e| format!("n={n}: {e}"))?);
        let got = (p.z, p.n_z, p.n_zp1, p.n3, p.n4, p.b_star, p.b1, p.b2);
        if got != (z, n_z, n_zp1, n3, n4, false, false, false) {
            return Err(format!("n={n}: got {p}"));
        }
    }
    Ok(format!("7/7 orders exact, slowest {slowest:.2?}"))
}

fn fuzz_params(rng: &mut StdRng) -> FamilyParams {
    loop {
        let z = rng.gen_range(15..=131);
        let mut p = FamilyParams::d_only(z, rng.gen_range(0..=8), rng.gen_range(0..=8));
        let n4 = match rng.gen_range(0..5) {
            1 => {
                p = p.with_star();
                0
            }
            2 => {
                p = p.with_d21(rng.gen_range(z - 5..=z));
                0
            }
            3 => {
                p = p.with_d22(rng.gen_range(z - 9..=z));
                0
            }
            4 => rng.gen_range(1..=4),
            _ => 0,
        };
        p = p.with_b4(n4).with_b3(rng.gen_range(0..=919 - n4));
        if p.validate().is_ok() {
            return p;
        }
    }
}

fn c2_objective_consistency() -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut worst = 0f64;
    for _ in 0..1000 {
        let p = fuzz_params(&mut rng);
        let tree = materialize(&p).map_err(|e| format!("{p}: {e}"))?;
        if tree.order() as u64 != order_of(&p) {
            return Err(format!("{p}: order {} != {}", tree.order(), order_of(&p)));
        }
        let cf = closed_form_abc(&p);
        let rel = (abc_index(&tree) - cf).abs() / cf;
        worst = worst.max(rel);
        if rel > OBJECTIVE_REL_TOL {
            return Err(format!("{p}: relative gap {rel:e}"));
        }
    }
    let e = within(Duration::from_secs(60), t)?;
    Ok(format!("1000 members, worst relative gap {worst:.2e} (tol {OBJECTIVE_REL_TOL:e}), {e:.2?}"))
}

fn c3_tables() -> Outcome {
    let t = Instant::now();
    let reports = scan_all();
    let mut points = 0;
    let mut margin = f64::INFINITY;
    for r in &reports {
        if !r.pass() {
            return Err(format!("{}: {} violations\n{}", r.id, r.violation_count(), r.to_text(false)));
        }
        points += r.points();
        margin = margin.min(r.min_margin());
    }
    if !(margin > 0.0) {
        return Err(format!("largest change {:e} is not negative", -margin));
    }
    let p = TransformParams::new().dv(1228).z(52).n3(918).n4(1);
    let anchor = delta_abc(TransformId::T7, Form::SurrogateB, &p).map_err(|e| e.to_string())?;
    if (anchor - -0.00201013).abs() > ANCHOR_TOL {
        return Err(format!("T7 anchor {anchor}"));
    }
    let e = within(Duration::from_secs(600), t)?;
    Ok(format!(
        "{} transforms, {points} points, 0 violations, largest change {:.3e}, T7 anchor {anchor:.8}, {e:.2?}",
        reports.len(),
        -margin
    ))
}

fn c4_pruning() -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED ^ 4);
    for _ in 0..50 {
        let n = rng.gen_range(1000..=50_000);
        let a = solve(n).map_err(|e| format!("n={n}: {e}"))?;
        let b = family_exhaustive(n).map_err(|e| format!("n={n}: {e}"))?;
        if a.best != b.best {
            return Err(format!("n={n}: pruned {} vs unpruned {}", a.best, b.best));
        }
    }
    let e = within(Duration::from_secs(600), t)?;
    Ok(format!("50 orders in [1000, 50000] agree, {e:.2?}"))
}

fn c5_observations() -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED ^ 5);
    let at = |n| solve(n).map(|r| r.best).map_err(|e| format!("n={n}: {e}"));
    if at(19040)?.n4 == 0 {
        return Err("solve(19040) has no B4-branch".into());
    }
    for _ in 0..20 {
        let n = rng.gen_range(19041..=5_000_000);
        if at(n)?.n4 != 0 {
            return Err(format!("n={n} has a B4-branch"));
        }
    }
    if at(1_017_676)?.n3 == 0 {
        return Err("solve(1017676) has no root B3-branch".into());
    }
    for _ in 0..10 {
        let n = rng.gen_range(1_017_677..=1_000_000_000);
        if at(n)?.n3 != 0 {
            return Err(format!("n={n} has a root B3-branch"));
        }
    }
    let (mut max_n3, mut arg) = (0, 0);
    for n in (265_000..=290_000).step_by(250) {
        let n3 = at(n)?.n3;
        if n3 > max_n3 {
            (max_n3, arg) = (n3, n);
        }
    }
    if max_n3 != 738 {
        return Err(format!("max n3 over [265000, 290000] is {max_n3} at n={arg}"));
    }
    Ok(format!("n4 boundary 19040, n3 boundary 1017676, max n3 = 738 at n={arg}, {:.2?}", t.elapsed()))
}

fn c6_oracle() -> Outcome {
    let t = Instant::now();
    let counts = [1usize, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
    for (n, &want) in counts.iter().enumerate().skip(1) {
        let got = enumerate_trees(n).map_err(|e| e.to_string())?.count();
        if got != want {
            return Err(format!("{got} free trees of order {n}, expected {want}"));
        }
    }
    for (n, want) in [(4usize, 3.0 / 2f64.sqrt()), (5, 4.0 / 2f64.sqrt())] {
        let r = brute_min_abc(n).map_err(|e| e.to_string())?;
        if (r.abc - want).abs() > ORACLE_TOL || r.argmins.len() != 1 {
            return Err(format!("brute_min_abc({n}) = {} with {} argmins", r.abc, r.argmins.len()));
        }
        let mut degs: Vec<usize> = (0..n).map(|v| r.best.degree(v)).collect();
        degs.sort();
        if degs != [vec![1, 1], vec![2; n - 2]].concat() {
            return Err(format!("brute_min_abc({n}) is not a path"));
        }
    }
    let e = within(Duration::from_secs(60), t)?;
    Ok(format!("free-tree counts n<=14, P4 and P5 minima, {e:.2?}"))
}

fn random_tree(rng: &mut StdRng, n: usize) -> Tree {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Tree::from_edges(n, &edges).expect("random attachment is a tree")
}

fn c7_properties() -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    let mut switches = 0;
    while switches < 1000 {
        let n = rng.gen_range(6..=30);
        let tree = random_tree(&mut rng, n);
        let edges = tree.edges();
        let (i, j) = (rng.gen_range(0..edges.len()), rng.gen_range(0..edges.len()));
        let ((p, q), (r, s)) = (edges[i], edges[j]);
        let (p, q) = if rng.gen() { (q, p) } else { (p, q) };
        let (r, s) = if rng.gen() { (s, r) } else { (r, s) };
        if i == j || tree.degree(p) < tree.degree(r) || tree.degree(q) > tree.degree(s) {
            continue;
        }
        let Ok(g) = apply_switch(&tree, (p, q), (r, s)) else { continue };
        switches += 1;
        let delta = abc_index(&g) - abc_index(&tree);
        if delta > SWITCH_TOL {
            return Err(format!("switch raised the index by {delta:e}"));
        }
    }
    let mono = check_monotonicity(100_000, SEED);
    if !mono.pass() {
        return Err(mono.to_text());
    }
    let mut checks = 0;
    for id in TransformId::ALL {
        for rep in [surrogate_dominance(id, 10_000, SEED), surrogate_monotonicity(id, 10_000, SEED)] {
            if !rep.pass() {
                return Err(rep.to_text());
            }
            checks += rep.checks;
        }
    }
    Ok(format!(
        "1000 switches, {} monotonicity checks, {checks} surrogate checks, 0 violations, {:.2?}",
        mono.checks,
        t.elapsed()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("published orders", c1_published_orders),
        ("objective consistency", c2_objective_consistency),
        ("table reproduction", c3_tables),
        ("pruning soundness", c4_pruning),
        ("observation boundaries", c5_observations),
        ("oracle fixtures", c6_oracle),
        ("property suites", c7_properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => println!("PASS {} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
