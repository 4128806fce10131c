use tautilt::algebra::Algebra;
use tautilt::enumerate::*;
use tautilt::error::Error;
use tautilt::io::fixtures;
use tautilt::linalg::Field;
use tautilt::rep::*;

fn over_f2(name: &str) -> Algebra {
    fixtures::algebra(name).unwrap().reinterpret_over_field(Field::prime(2).unwrap()).unwrap()
}

/// Positive roots of A_n: intervals `[i, j]` with `1 ≤ i ≤ j ≤ n`.
fn interval_count(n: usize) -> usize {
    (1..=n).map(|i| (i..=n).count()).sum()
}

fn same_iso_classes(x: &[Module], y: &[Module]) -> bool {
    x.len() == y.len()
        && x.iter().all(|m| y.iter().any(|n| m.dims() == n.dims() && indecomposables_isomorphic(m, n)))
}

#[test]
fn linear_quivers_give_interval_modules() {
    for (name, n) in [("a2.alg", 2), ("a4.alg", 4)] {
        let cat = enumerate_indecomposables(&over_f2(name), &EnumerationBound::new(vec![1; n])).unwrap();
        assert_eq!(cat.len(), interval_count(n), "{name}");
        // every interval appears as a 0/1 dimension vector with consecutive support
        for m in &cat.modules {
            let support: Vec<usize> = (0..n).filter(|&v| m.dims()[v] == 1).collect();
            assert!(support.windows(2).all(|w| w[1] == w[0] + 1), "{:?}", m.dims());
        }
    }
}

#[test]
fn small_catalog_counts() {
    let two_cycle = enumerate_indecomposables(&over_f2("two_cycle.alg"), &EnumerationBound::new(vec![1, 1])).unwrap();
    assert_eq!(two_cycle.len(), 4);
    let chain_end = enumerate_indecomposables(&over_f2("a4_two_zeros.alg"), &EnumerationBound::new(vec![1; 4])).unwrap();
    assert_eq!(chain_end.len(), 7);
    let dual = enumerate_indecomposables(&over_f2("dual_numbers.alg"), &EnumerationBound::new(vec![3])).unwrap();
    // K[x]/(x^2): only the simple and the regular module
    assert_eq!(dual.modules.iter().map(|m| m.dims()[0]).collect::<Vec<_>>(), vec![1, 2]);
}

#[test]
fn members_are_indecomposable_and_pairwise_distinct() {
    for (name, caps) in [("a4_one_zero.alg", vec![1; 4]), ("auslander.alg", vec![1, 2, 2])] {
        let cat = enumerate_indecomposables(&over_f2(name), &EnumerationBound::new(caps)).unwrap();
        assert!(cat.non_split.is_empty());
        for (i, m) in cat.modules.iter().enumerate() {
            assert!(is_indecomposable(m).unwrap());
            for n in &cat.modules[..i] {
                assert!(!is_isomorphic(m, n).unwrap());
            }
        }
    }
}

#[test]
fn catalog_is_independent_of_generation_order() {
    for name in ["a4_one_zero.alg", "two_cycle.alg", "auslander.alg"] {
        let a = over_f2(name);
        let caps = EnumerationBound::projective_injective_hull(&a);
        let k = a.presentation_or_derived().arrows.len();
        let forward = enumerate_indecomposables(&a, &caps).unwrap();
        let reversed = enumerate_with_order(&a, &caps, &(0..k).rev().collect::<Vec<_>>()).unwrap();
        assert!(same_iso_classes(&forward.modules, &reversed.modules), "{name}");
    }
}

#[test]
fn stability_probe() {
    assert!(catalog_stability_probe(&over_f2("a4.alg"), &EnumerationBound::new(vec![1; 4])).unwrap());
    assert!(!catalog_stability_probe(&over_f2("a4.alg"), &EnumerationBound::new(vec![0; 4])).unwrap());
    // caps (1,2,1) miss indecomposables with larger support at the last vertex
    let aus = over_f2("auslander.alg");
    assert!(!catalog_stability_probe(&aus, &EnumerationBound::new(vec![1, 2, 1])).unwrap());
    assert_eq!(enumerate_indecomposables(&aus, &EnumerationBound::new(vec![1, 2, 1])).unwrap().len(), 12);
    assert_eq!(enumerate_indecomposables(&aus, &EnumerationBound::new(vec![1, 2, 3])).unwrap().len(), 20);
}

#[test]
fn hull_caps_cover_projectives_and_injectives() {
    let a = fixtures::algebra("auslander.alg").unwrap();
    let hull = EnumerationBound::projective_injective_hull(&a);
    let s = standard_modules(&a);
    for m in s.projectives.iter().chain(&s.injectives) {
        assert!(m.dims().iter().zip(&hull.caps).all(|(d, c)| d <= c));
    }
    assert_eq!(catalog(&a, &hull).unwrap().len(), 20);
}

#[test]
fn budget_overflow_is_an_error() {
    let a = over_f2("auslander.alg");
    let err = enumerate_indecomposables(&a, &EnumerationBound::new(vec![1, 2, 3]).with_budget(50)).unwrap_err();
    assert!(matches!(err, Error::Budget(_)), "{err}");
    assert!(enumerate_indecomposables(&fixtures::algebra("a4.alg").unwrap(), &EnumerationBound::new(vec![1; 4])).is_err());
}

#[test]
fn zero_caps_give_an_empty_catalog() {
    let cat = enumerate_indecomposables(&over_f2("a4.alg"), &EnumerationBound::new(vec![0; 4])).unwrap();
    assert!(cat.is_empty());
    assert_eq!(EnumerationBound::new(vec![0; 4]).raw_search_space(&over_f2("a4.alg")), 0);
}

#[test]
fn search_space_counts_arrow_matrices() {
    // A2 within caps (1,1): dims (1,0), (0,1) contribute one tuple each, (1,1) contributes 2^1
    assert_eq!(EnumerationBound::new(vec![1, 1]).raw_search_space(&over_f2("a2.alg")), 4);
}

#[test]
fn lifted_catalog_over_the_rationals() {
    let a = fixtures::algebra("a4_one_zero.alg").unwrap();
    let lifted = lifted_catalog(&a, &EnumerationBound::new(vec![1; 4]), 2).unwrap();
    assert_eq!(lifted.len(), 8);
    for m in &lifted {
        assert_eq!(m.algebra().field(), Field::Rational);
        assert!(is_indecomposable(m).unwrap());
    }
    let p3 = lifted_catalog(&a, &EnumerationBound::new(vec![1; 4]), 3).unwrap();
    assert!(same_iso_classes(&lifted, &p3));
}
