//! Independent oracles shared by the integration suites. None of these go
//! through the structural bracket table, the graph closure, or the spanning
//! tree enumerator.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Zero};
use structctrl::pattern_graph::Pattern;
use structctrl::se_algebra::{all_basis, dense_bracket, dense_of, BasisElement, DenseElement};
use structctrl::sparse_design::CostMatrix;

pub fn ex31() -> Pattern {
    Pattern::new(3, [(1, 2), (2, 3), (1, 4)]).unwrap()
}

pub fn ex32() -> Pattern {
    Pattern::new(3, [(1, 4), (3, 4), (1, 2)]).unwrap()
}

/// Row-reduced basis of a subspace of rational `(n+1)^2`-vectors.
#[derive(Default)]
pub struct RationalSpan {
    rows: Vec<(usize, Vec<Rational64>)>,
}

impl RationalSpan {
    fn reduce(&self, v: &[Rational64]) -> Vec<Rational64> {
        let mut r = v.to_vec();
        for (pivot, row) in &self.rows {
            let f = r[*pivot];
            if !f.is_zero() {
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational64]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Rational64]) -> bool {
        let r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational64::one() / r[pivot];
        let r: Vec<Rational64> = r.iter().map(|x| x * inv).collect();
        for (_, row) in self.rows.iter_mut() {
            let f = row[pivot];
            if !f.is_zero() {
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= f * y;
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn flatten(m: &DenseElement<Rational64>) -> Vec<Rational64> {
    let k = m.n() + 1;
    let mut out = Vec::with_capacity(k * k);
    for r in 1..=k {
        for c in 1..=k {
            out.push(m.get(r, c));
        }
    }
    out
}

/// Lie algebra generated by dense rational matrices, by brute-force
/// bracketing of flattened matrices until the rank stops growing.
pub fn dense_closure(n: usize, gens: &[DenseElement<Rational64>]) -> (RationalSpan, Vec<DenseElement<Rational64>>) {
    let mut span = RationalSpan::default();
    let mut elems: Vec<DenseElement<Rational64>> = Vec::new();
    for g in gens {
        assert_eq!(g.n(), n);
        if span.insert(&flatten(g)) {
            elems.push(g.clone());
        }
    }
    let mut done = 0;
    while done < elems.len() {
        let upto = elems.len();
        for j in done..upto {
            for i in 0..upto {
                let b = dense_bracket(&elems[i], &elems[j]).unwrap();
                if span.insert(&flatten(&b)) {
                    elems.push(b);
                }
            }
        }
        done = upto;
    }
    (span, elems)
}

/// Basis elements lying in the dense closure of the given basis elements.
pub fn dense_closure_of_basis(n: usize, elems: &[BasisElement]) -> Vec<BasisElement> {
    let gens: Vec<_> = elems.iter().map(dense_of::<Rational64>).collect();
    let (span, _) = dense_closure(n, &gens);
    all_basis(n)
        .into_iter()
        .filter(|b| span.contains(&flatten(&dense_of(b))))
        .collect()
}

/// Dense rational rank condition for `BS_Λ`.
pub fn dense_larc(p: &Pattern) -> bool {
    let n = p.n();
    let elems: Vec<BasisElement> = p.basis().iter().copied().collect();
    let gens: Vec<_> = elems.iter().map(dense_of::<Rational64>).collect();
    dense_closure(n, &gens).0.rank() == n * (n + 1) / 2
}

/// Minimum objective over every pattern (not only trees) accepted by
/// `controllable`.
pub fn exhaustive_min_cost<W, F>(costs: &CostMatrix<W>, controllable: F) -> W
where
    W: structctrl::sparse_design::CostValue,
    F: Fn(&Pattern) -> bool,
{
    Pattern::all(costs.n())
        .filter(|p| controllable(p))
        .map(|p| p.entries().fold(W::zero(), |acc, (i, j)| acc + costs.entry_cost(i, j)))
        .reduce(|a, b| if b < a { b } else { a })
        .expect("the full pattern is controllable")
}

/// Deterministic xorshift stream for random instances.
pub struct Xorshift(pub u64);

impl Xorshift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Positive rational with small numerator and denominator.
    pub fn rational(&mut self) -> Rational64 {
        let num = (self.next() % 20 + 1) as i64;
        let den = (self.next() % 6 + 1) as i64;
        Rational64::new(num, den)
    }
}

pub fn random_rational_costs(n: usize, rng: &mut Xorshift) -> CostMatrix<Rational64> {
    let mut solid = BTreeMap::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            solid.insert((i, j), rng.rational());
        }
    }
    let broken = (0..n).map(|_| rng.rational()).collect();
    CostMatrix::new(n, solid, broken).unwrap()
}
