use minabc_family::FamilyParams;
use minabc_solver::{solve, SolveError};

fn check(n: u64, z: u32, n_z: u64, n_zp1: u64, n3: u32, n4: u32) {
    let r = solve(n).unwrap();
    let p = r.best;
    assert_eq!((p.z, p.n_z, p.n_zp1, p.n3, p.n4), (z, n_z, n_zp1, n3, n4), "n={n}: got {p}");
    assert!(!p.b_star && !p.b1 && !p.b2, "n={n}: unexpected modified branch in {p}");
    assert_eq!(minabc_family::order_of(&p), n);
    assert!(r.characterized);
}

#[test]
fn n5047() {
    check(5047, 50, 7, 4, 164, 1);
}

#[test]
fn n6956() {
    check(6956, 49, 1, 15, 191, 1);
}

#[test]
fn n16443() {
    check(16443, 49, 0, 41, 293, 0);
}

#[test]
fn n1014814() {
    check(1014814, 51, 2594, 236, 3, 0);
}

#[test]
fn n1142741() {
    check(1142741, 51, 3035, 154, 0, 0);
}

#[test]
fn n1257073() {
    check(1257073, 51, 259, 3190, 0, 0);
}

#[test]
fn n1329e13() {
    check(13_290_000_000_000_000, 51, 178, 36_410_958_903_935, 0, 0);
}

#[test]
fn order_106_is_infeasible() {
    assert_eq!(solve(106), Err(SolveError::Infeasible(106)));
    assert_eq!(solve(1), Err(SolveError::Infeasible(1)));
}

#[test]
fn smallest_member_is_advisory() {
    let r = solve(107).unwrap();
    assert_eq!(r.best, FamilyParams::d_only(15, 1, 0));
    assert!(!r.characterized);
}

#[test]
fn tie_at_16443_is_reported() {
    let r = solve(16443).unwrap();
    assert!(r.ties.is_empty() || r.ties[0] == r.best);
    for t in &r.ties {
        assert!(t.tie_key() >= r.best.tie_key());
        assert_eq!(minabc_family::order_of(t), 16443);
    }
}
