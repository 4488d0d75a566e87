mod common;

use common::{dense_closure_of_basis, dense_larc};
use proptest::prelude::*;
use structctrl::pattern_graph::Pattern;
use structctrl::se_algebra::*;

fn rot(n: usize, i: usize, j: usize) -> BasisElement {
    BasisElement::rotation(n, i, j).unwrap()
}

fn tr(n: usize, k: usize) -> BasisElement {
    BasisElement::translation(n, k).unwrap()
}

fn term_matrix(n: usize, t: SignedBasisTerm) -> DenseElement<i64> {
    match t.element() {
        None => DenseElement::zero(n),
        Some(e) => dense_of::<i64>(&e).scale(t.coefficient() as i64),
    }
}

#[test]
fn structural_bracket_matches_matrix_commutator() {
    for n in 1..=6 {
        let all = all_basis(n);
        for a in &all {
            for b in &all {
                let structural = term_matrix(n, structural_bracket(a, b).unwrap());
                let dense = dense_bracket(&dense_of::<i64>(a), &dense_of(b)).unwrap();
                assert_eq!(structural, dense, "[{a}, {b}] in se({n})");
            }
        }
    }
}

#[test]
fn jacobi_identity_on_basis_triples() {
    for n in 1..=4 {
        let mats: Vec<DenseElement<i64>> = all_basis(n).iter().map(dense_of).collect();
        for a in &mats {
            for b in &mats {
                for c in &mats {
                    let t1 = dense_bracket(a, &dense_bracket(b, c).unwrap()).unwrap();
                    let t2 = dense_bracket(b, &dense_bracket(c, a).unwrap()).unwrap();
                    let t3 = dense_bracket(c, &dense_bracket(a, b).unwrap()).unwrap();
                    for r in 1..=n + 1 {
                        for col in 1..=n + 1 {
                            assert_eq!(t1.get(r, col) + t2.get(r, col) + t3.get(r, col), 0);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn brackets_stay_in_se() {
    for n in 1..=5 {
        let mats: Vec<DenseElement<i64>> = all_basis(n).iter().map(dense_of).collect();
        for a in &mats {
            assert!(a.is_in_se());
            for b in &mats {
                assert!(dense_bracket(a, b).unwrap().is_in_se());
            }
        }
    }
}

#[test]
fn closure_example_against_dense_oracle() {
    let gens = [rot(3, 1, 2), tr(3, 1), tr(3, 3)];
    let expected = dense_closure_of_basis(3, &gens);
    assert_eq!(expected, vec![rot(3, 1, 2), tr(3, 1), tr(3, 2), tr(3, 3)]);
    let d = CanonicalSubspace::from_elements(3, gens).unwrap();
    assert_eq!(lie_closure(&d).iter().copied().collect::<Vec<_>>(), expected);
}

#[test]
fn closure_matches_dense_oracle_exhaustively() {
    for n in 1..=4 {
        for mask in 0..(1u64 << se_dim(n)) {
            let d = CanonicalSubspace::from_mask(n, mask);
            let elems: Vec<_> = d.iter().copied().collect();
            let closure: Vec<_> = lie_closure(&d).iter().copied().collect();
            assert_eq!(closure, dense_closure_of_basis(n, &elems), "mask {mask:#b} in se({n})");
        }
    }
}

#[test]
fn numeric_rank_condition_matches_exact_on_basis_generators() {
    for n in 1..=4 {
        for p in Pattern::all(n) {
            let numeric = larc_numeric(&basis_realization(&p), DEFAULT_TOL).unwrap();
            assert_eq!(numeric, larc_exact(&p.basis()), "{p}");
        }
    }
}

#[test]
fn exact_rank_condition_matches_dense_oracle() {
    for n in 1..=3 {
        for p in Pattern::all(n) {
            assert_eq!(larc_exact(&p.basis()), dense_larc(&p), "{p}");
        }
    }
}

#[test]
fn random_realizations_of_full_se2() {
    let p = Pattern::full(2);
    for seed in 0..5u64 {
        let mats = [sample_realization(&p, 100 + 2 * seed), sample_realization(&p, 101 + 2 * seed)];
        assert!(larc_numeric(&mats, DEFAULT_TOL).unwrap(), "seed {seed}");
    }
    assert!(larc_exact(&p.basis()));
}

proptest! {
    #[test]
    fn closure_is_idempotent_and_monotone(n in 1usize..=5, raw in any::<u64>()) {
        let mask = raw & ((1u64 << se_dim(n)) - 1);
        let d = CanonicalSubspace::from_mask(n, mask);
        let step = derived_step(&d);
        prop_assert!(d.is_subset(&step));
        let c = lie_closure(&d);
        prop_assert!(d.is_subset(&c));
        prop_assert_eq!(lie_closure(&c), c.clone());
        prop_assert!(derived_series(&d).len() <= n + 1);
    }

    #[test]
    fn realizations_stay_in_pattern(n in 1usize..=5, raw in any::<u64>(), seed in any::<u64>()) {
        let count = se_dim(n);
        let p = Pattern::from_mask(n, raw & ((1u64 << count) - 1));
        let m = sample_realization(&p, seed);
        prop_assert!(m.is_in_se());
        for (b, c) in all_basis(n).iter().zip(m.coordinates()) {
            let (i, j) = b.entry();
            if p.contains(i, j) {
                prop_assert!(c.abs() >= MIN_COEFFICIENT && c.abs() <= 1.0);
            } else {
                prop_assert_eq!(c, 0.0);
            }
        }
    }
}
