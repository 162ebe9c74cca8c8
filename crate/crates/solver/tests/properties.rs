use std::collections::BTreeSet;

use minabc_family::FamilyParams;
use minabc_solver::{enumerate_feasible, solve, Cell, Extra};
use proptest::prelude::*;

fn template(cell: Cell, n3: u32) -> FamilyParams {
    let p = FamilyParams::d_only(cell.z, 0, 0).with_b3(n3);
    match cell.extra {
        Extra::Plain => p,
        Extra::Star => p.with_star(),
        Extra::D21(k) => p.with_d21(k),
        Extra::D22(k) => p.with_d22(k),
        Extra::B4(n4) => p.with_b4(n4),
    }
}

fn brute_pairs(cell: Cell, n: u64, n3: u32) -> BTreeSet<(u64, u64)> {
    let Some(r) = n.checked_sub(minabc_family::order_of(&template(cell, n3))) else {
        return BTreeSet::new();
    };
    let z = cell.z as u64;
    let (a, b) = (7 * z + 1, 7 * z + 8);
    (0..=r / b)
        .filter(|m| (r - m * b) % a == 0)
        .map(|m| ((r - m * b) / a, m))
        .filter(|&(nz, m)| nz + m > 0)
        .collect()
}

fn progression_pairs(cell: Cell, n: u64, n3: u32) -> BTreeSet<(u64, u64)> {
    match cell.progression(n, n3) {
        None => BTreeSet::new(),
        Some(pr) => (0..=pr.t_max).map(|t| pr.at(t)).map(|p| (p.n_z, p.n_zp1)).collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn diophantine_progression_is_complete(
        n in 107u64..2_000_000,
        picks in prop::collection::vec((any::<prop::sample::Index>(), 0u32..=919), 8),
    ) {
        let cells = Cell::all();
        for (ci, n3) in picks {
            let cell = cells[ci.index(cells.len())];
            let n3 = n3.min(919 - match cell.extra { Extra::B4(k) => k, _ => 0 });
            prop_assert_eq!(progression_pairs(cell, n, n3), brute_pairs(cell, n, n3), "{:?} n3={}", cell, n3);
        }
    }
}

#[test]
fn feasible_members_have_the_requested_order() {
    for n in [107u64, 500, 1000, 1234, 5047] {
        let mut seen = BTreeSet::new();
        for p in enumerate_feasible(n) {
            p.validate().unwrap();
            assert_eq!(minabc_family::order_of(&p), n);
            assert!(seen.insert(format!("{p:?}")), "duplicate {p}");
        }
        assert!(!seen.is_empty(), "n={n}");
    }
}

#[test]
fn minimum_strictly_increases_with_order() {
    for (lo, hi) in [(1000u64, 1150u64), (50_000, 50_040), (2_000_000, 2_000_010)] {
        let vals: Vec<f64> = (lo..=hi).map(|n| solve(n).unwrap().abc_value).collect();
        for (i, w) in vals.windows(2).enumerate() {
            assert!(w[1] > w[0], "not increasing at n={}", lo + i as u64);
        }
    }
}

#[test]
fn repeated_and_threaded_solves_agree() {
    let ns = [1000u64, 5047, 19040, 123_457, 1_014_814];
    let base: Vec<_> = ns.iter().map(|&n| solve(n).unwrap()).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let threaded: Vec<_> = pool.install(|| ns.iter().map(|&n| solve(n).unwrap()).collect());
    for (a, b) in base.iter().zip(&threaded) {
        assert_eq!(a.best, b.best);
        assert_eq!(a.abc_value.to_bits(), b.abc_value.to_bits());
        assert_eq!(a.abc_value_hp, b.abc_value_hp);
        assert_eq!(a.ties, b.ties);
        assert_eq!(a, &solve(a.n).unwrap());
    }
}
