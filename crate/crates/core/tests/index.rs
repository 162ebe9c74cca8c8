use minabc_core::{abc_index, abc_index_hp, f, Tree};
use proptest::prelude::*;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn path_four() {
    let v = abc_index(&Tree::path(4));
    assert!(close(v, 3.0 / 2f64.sqrt(), 1e-15));
    assert_eq!(abc_index_hp(&Tree::path(4)).to_decimal(9), "2.12132034");
}

#[test]
fn star_k14() {
    let v = abc_index(&Tree::star(5));
    assert!(close(v, 2.0 * 3f64.sqrt(), 1e-15));
    assert_eq!(abc_index_hp(&Tree::star(5)).to_decimal(9), "3.46410162");
}

#[test]
fn spider_211() {
    // centre 0, legs 0-1-2, 0-3, 0-4
    let t = Tree::from_edges(5, &[(0, 1), (1, 2), (0, 3), (0, 4)]).unwrap();
    let hand = 2.0 * f(3.0, 1.0).unwrap() + f(3.0, 2.0).unwrap() + f(2.0, 1.0).unwrap();
    assert!(close(abc_index(&t), hand, 1e-15));
    // 60-digit decimal evaluation of the same sum
    assert_eq!(abc_index_hp(&t).to_decimal(17), "3.0472067242285471");
}

#[test]
fn path_and_star_formulas() {
    for n in 3..200 {
        assert!(close(abc_index(&Tree::path(n)), (n as f64 - 1.0) / 2f64.sqrt(), 1e-12));
    }
    for n in 3..200 {
        let want = ((n as f64 - 1.0) * (n as f64 - 2.0)).sqrt();
        assert!(close(abc_index(&Tree::star(n)), want, 1e-11));
    }
}

#[test]
fn hp_agrees_with_f64() {
    for n in [10usize, 100, 1000] {
        for t in [Tree::path(n), Tree::star(n)] {
            let a = abc_index(&t);
            let b = abc_index_hp(&t).to_f64();
            assert!(close(a, b, 1e-12 * a), "n={n}");
        }
    }
}

fn random_tree(parents: &[usize]) -> Tree {
    // parents[i] picks the parent of vertex i+1 among 0..=i
    let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1)).collect();
    Tree::from_edges(parents.len() + 1, &edges).unwrap()
}

proptest! {
    #[test]
    fn index_is_relabel_invariant(
        parents in prop::collection::vec(any::<usize>(), 1..40),
        seed in any::<u64>(),
    ) {
        let t = random_tree(&parents);
        let n = t.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let r = t.relabel(&perm).unwrap();
        prop_assert!((abc_index(&t) - abc_index(&r)).abs() <= 1e-12);
        prop_assert_eq!(abc_index_hp(&t), abc_index_hp(&r));
        prop_assert_eq!(t.degree_census(), r.degree_census());
    }
}
