use std::collections::BTreeMap;

use minabc_core::abc_index;
use minabc_family::*;
use proptest::prelude::*;

fn arb_params() -> impl Strategy<Value = FamilyParams> {
    (Z_MIN..=Z_MAX, 0u64..25, 0u64..25, 0usize..5, 0u32..=9, 0u32..=N3_N4_MAX, 1u32..=4)
        .prop_filter_map("needs a D-branch", |(z, nz, nz1, flag, dk, n3, n4)| {
            if nz + nz1 == 0 {
                return None;
            }
            let mut p = FamilyParams::d_only(z, nz, nz1);
            match flag {
                1 => p = p.with_star(),
                2 => p = p.with_d21(z - dk.min(5)),
                3 => p = p.with_d22(z - dk),
                4 => p = p.with_b4(n4),
                _ => {}
            }
            let n3 = n3.min(N3_N4_MAX - p.n4);
            Some(p.with_b3(n3))
        })
}

fn census(t: &minabc_core::Tree) -> BTreeMap<u64, u64> {
    t.degree_census().into_iter().map(|(d, c)| (d as u64, c as u64)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closed_form_matches_edge_sum(p in arb_params()) {
        prop_assert!(p.validate().is_ok());
        let t = materialize(&p).unwrap();
        let exact = abc_index(&t);
        let closed = closed_form_abc(&p);
        prop_assert!((exact - closed).abs() / closed <= 1e-9, "{} vs {}", exact, closed);
        prop_assert!((closed_form_abc_hp(&p).to_f64() - closed).abs() / closed <= 1e-13);
    }

    #[test]
    fn bookkeeping_matches_tree(p in arb_params()) {
        let t = materialize(&p).unwrap();
        prop_assert_eq!(order_of(&p), t.order() as u64);
        prop_assert_eq!(root_degree(&p), t.degree(0) as u64);
        let s = summarize(&p);
        prop_assert!(s.handshake_ok());
        prop_assert_eq!(&s.degrees, &census(&t));
    }

    #[test]
    fn only_expected_degrees_occur(p in arb_params()) {
        let s = summarize(&p);
        let z = p.z as u64;
        let mut allowed = vec![1, 2, 3, 4, 5, z + 1, z + 2, s.root_degree];
        if p.b1 { allowed.push(p.k1 as u64 + 1); }
        if p.b2 { allowed.push(p.k2 as u64 + 1); }
        for d in s.degrees.keys() {
            prop_assert!(allowed.contains(d), "unexpected degree {}", d);
        }
        if !(p.b1 || p.b2 || p.b_star) {
            prop_assert!(!s.degrees.contains_key(&3) || s.root_degree == 3);
        }
        if !p.b4 {
            prop_assert!(!s.degrees.contains_key(&5) || s.root_degree == 5 || z + 1 == 5);
        }
    }
}

#[test]
fn smallest_member() {
    let p = FamilyParams::d_only(15, 1, 0);
    let t = materialize(&p).unwrap();
    assert_eq!(t.order(), 107);
    let want: BTreeMap<u64, u64> = [(1, 46), (2, 45), (4, 15), (16, 1)].into_iter().collect();
    assert_eq!(census(&t), want);
    assert!((abc_index(&t) - closed_form_abc(&p)).abs() < 1e-10);
}

#[test]
fn order_5047_member() {
    let p = FamilyParams::d_only(50, 7, 4).with_b3(164).with_b4(1);
    let t = materialize(&p).unwrap();
    assert_eq!(t.order(), 5047);
    assert_eq!(t.degree(0), 176);
    assert!((abc_index(&t) - closed_form_abc(&p)).abs() < 1e-10);
}

#[test]
fn order_16443_summary() {
    let p = FamilyParams::d_only(49, 0, 41).with_b3(293);
    let s = summarize(&p);
    assert_eq!((s.order, s.root_degree), (16443, 334));
}

#[test]
fn two_b2_branches_give_two_degree_three_vertices() {
    let p = FamilyParams::d_only(20, 1, 0).with_d22(15);
    let t = materialize(&p).unwrap();
    assert_eq!(t.order(), 244);
    assert_eq!(census(&t).get(&3), Some(&2));
}

#[test]
fn double_star_branch_has_one_degree_three_vertex() {
    let p = FamilyParams::d_only(20, 1, 0).with_star();
    let t = materialize(&p).unwrap();
    assert_eq!(t.order() as u64, 1 + 141 + 144);
    assert_eq!(census(&t).get(&3), Some(&1));
    assert!((abc_index(&t) - closed_form_abc(&p)).abs() < 1e-10);
}

#[test]
fn numbering_is_deterministic() {
    let p = FamilyParams::d_only(16, 2, 1).with_d21(12).with_b3(3);
    assert_eq!(materialize(&p).unwrap().edges(), materialize(&p).unwrap().edges());
}

#[test]
fn rejects_invalid_and_oversized() {
    assert!(materialize(&FamilyParams::d_only(10, 1, 0)).is_err());
    let huge = FamilyParams::d_only(51, 178, 36_410_958_903_935);
    assert!(matches!(materialize(&huge), Err(ParamError::TooLarge(_))));
}
