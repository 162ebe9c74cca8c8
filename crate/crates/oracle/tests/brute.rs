use minabc_core::{abc_index, abc_index_hp};
use minabc_family::{materialize, summarize};
use minabc_oracle::{brute_min_abc, enumerate_trees, family_exhaustive, OracleError};
use minabc_solver::solve;

fn is_path(t: &minabc_core::Tree) -> bool {
    (0..t.order()).all(|v| t.degree(v) <= 2)
}

#[test]
fn order_four_is_the_path() {
    let r = brute_min_abc(4).unwrap();
    assert_eq!(r.trees_searched, 2);
    assert!(is_path(&r.best));
    assert!((r.abc - 3.0 / 2f64.sqrt()).abs() < 1e-12);
    assert_eq!(r.abc_hp.to_decimal(9), "2.12132034");
    assert_eq!(r.argmins.len(), 1);
}

#[test]
fn order_five_is_the_path() {
    let r = brute_min_abc(5).unwrap();
    assert_eq!(r.trees_searched, 3);
    assert!(is_path(&r.best));
    assert_eq!(r.abc_hp.to_decimal(9), "2.82842712");
}

#[test]
fn order_ten_fixture() {
    let r = brute_min_abc(10).unwrap();
    assert_eq!(r.trees_searched, 106);
    assert_eq!(r.abc_hp.to_decimal(17), FIXTURE_10);
    for t in enumerate_trees(10).unwrap() {
        assert!(abc_index(&t) >= r.abc - 1e-12);
    }
}

// Frozen from an independent Python enumeration (leaf growth plus canonical
// dedupe, 60-digit decimal sums).
const FIXTURE_10: &str = "6.3235209161590469";

#[test]
fn ties_are_all_reported() {
    for n in 4..=12 {
        let r = brute_min_abc(n).unwrap();
        let min = abc_index_hp(&r.best);
        for t in &r.argmins {
            assert!(abc_index_hp(t).rel_close(&min, 25));
        }
    }
}

#[test]
fn brute_bounds() {
    assert_eq!(brute_min_abc(3).unwrap_err(), OracleError::TooSmall(3));
    assert_eq!(brute_min_abc(25).unwrap_err(), OracleError::CapExceeded(25));
}

#[test]
fn exhaustive_family_agrees_with_solver() {
    for n in [107u64, 5047, 16443] {
        let a = solve(n).unwrap();
        let b = family_exhaustive(n).unwrap();
        assert_eq!(a.best, b.best, "n={n}");
    }
    let r = family_exhaustive(107).unwrap();
    assert_eq!((r.best.z, r.best.n_z, r.best.n_zp1), (15, 1, 0));
    assert_eq!(summarize(&r.best).order, 107);
    assert_eq!(materialize(&r.best).unwrap().order(), 107);
}
