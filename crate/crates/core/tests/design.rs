mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{exhaustive_min_cost, random_rational_costs, Xorshift};
use num_rational::Rational64;
use structctrl::pattern_graph::{is_structurally_controllable, Method, Pattern};
use structctrl::se_algebra::larc_exact;
use structctrl::sparse_design::*;

#[test]
fn minimal_patterns_match_exhaustive_search() {
    for n in 1..=4 {
        let controllable: Vec<Pattern> = Pattern::all(n).filter(|p| larc_exact(&p.basis())).collect();
        let min_size = controllable.iter().map(Pattern::len).min().unwrap();
        assert_eq!(min_size, n);
        let smallest: BTreeSet<Pattern> = controllable.into_iter().filter(|p| p.len() == n).collect();
        let enumerated: BTreeSet<Pattern> = enumerate_minimal(n).unwrap().iter().map(|t| t.pattern().clone()).collect();
        assert_eq!(smallest, enumerated, "n = {n}");
    }
}

#[test]
fn enumeration_counts_and_validity() {
    for n in 1..=6 {
        let all = enumerate_minimal(n).unwrap();
        assert_eq!(all.len(), n.pow(n as u32 - 1));
        let distinct: BTreeSet<_> = all.iter().map(|t| t.pattern()).collect();
        assert_eq!(distinct.len(), all.len());
        for t in &all {
            assert_eq!(t.pattern().len(), n);
            assert_eq!(t.solid_tree().len(), n - 1);
            assert!(is_structurally_controllable(t.pattern(), Method::Connectivity));
        }
    }
}

#[test]
fn enumeration_for_n3_cross_checked() {
    let all = enumerate_minimal(3).unwrap();
    assert_eq!(all.len(), 9);
    for t in &all {
        assert!(larc_exact(&t.pattern().basis()));
    }
}

#[test]
fn algorithm_matches_exhaustive_pattern_search() {
    // the oracle here ranges over every pattern, not only the tree-shaped ones
    let mut rng = Xorshift(0x5eed_1234);
    for n in 2..=4 {
        for _ in 0..40 {
            let c = random_rational_costs(n, &mut rng);
            let (t, cost) = min_cost_pattern(&c);
            assert!(larc_exact(&t.pattern().basis()));
            assert_eq!(cost, exhaustive_min_cost(&c, |p| larc_exact(&p.basis())));
        }
    }
}

#[test]
fn algorithm_matches_tree_enumeration() {
    let mut rng = Xorshift(0xabcdef);
    for n in 2..=5 {
        for _ in 0..100 {
            let c = random_rational_costs(n, &mut rng);
            let (t, cost) = min_cost_pattern(&c);
            assert_eq!(cost, brute_force_min_cost(&c).unwrap());
            assert_eq!(t.cost(&c), cost);
        }
    }
}

#[test]
fn float_costs_agree_within_relative_tolerance() {
    let mut rng = Xorshift(42);
    for n in 2..=5 {
        for _ in 0..25 {
            let mut solid = BTreeMap::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    solid.insert((i, j), (rng.next() % 10_000 + 1) as f64 / 997.0);
                }
            }
            let broken = (0..n).map(|_| (rng.next() % 10_000 + 1) as f64 / 991.0).collect();
            let c = CostMatrix::new(n, solid, broken).unwrap();
            let (_, cost) = min_cost_pattern(&c);
            let best = brute_force_min_cost(&c).unwrap();
            assert!((cost - best).abs() <= 1e-12 * best.abs());
        }
    }
}

#[test]
fn mst_and_translation_choice_are_separable() {
    let mut rng = Xorshift(7);
    for n in 2..=5 {
        for _ in 0..20 {
            let c = random_rational_costs(n, &mut rng);
            let (t, _) = min_cost_pattern(&c);

            let other = random_rational_costs(n, &mut rng);
            let new_broken: Vec<Rational64> = (1..=n).map(|k| other.broken_cost(k)).collect();
            let (t2, _) = min_cost_pattern(&c.with_broken(new_broken).unwrap());
            assert_eq!(t.solid_tree(), t2.solid_tree());

            let new_solid: BTreeMap<_, _> = (1..=n)
                .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
                .map(|(i, j)| ((i, j), other.solid_cost(i, j)))
                .collect();
            let (t3, _) = min_cost_pattern(&c.with_solid(new_solid).unwrap());
            assert_eq!(t.broken_edge(), t3.broken_edge());
        }
    }
}

#[test]
fn worked_instance_in_rationals() {
    let r = |x: i64| Rational64::from_integer(x);
    let c = CostMatrix::new(
        3,
        BTreeMap::from([((1, 2), r(1)), ((2, 3), r(2)), ((1, 3), r(5))]),
        vec![r(3), r(1), r(4)],
    )
    .unwrap();
    let (t, cost) = min_cost_pattern(&c);
    assert_eq!(t.pattern(), &Pattern::new(3, [(1, 2), (2, 3), (2, 4)]).unwrap());
    assert_eq!(cost, r(4));
    assert_eq!(brute_force_min_cost(&c).unwrap(), r(4));
}

#[test]
fn zero_translation_cost_with_permissive_validator() {
    let c = CostMatrix::new_permissive(2, BTreeMap::from([((1, 2), 3.0)]), vec![0.0, 2.0]).unwrap();
    let (t, cost) = min_cost_pattern(&c);
    assert_eq!(t.broken_edge(), (1, 3));
    assert_eq!(cost, 3.0);
}
