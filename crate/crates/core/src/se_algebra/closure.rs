use super::basis::{BasisElement, BasisKind, CanonicalSubspace, SignedBasisTerm};
use crate::error::{Error, Result};

/// Bracket of two standard basis elements, read off the bracket table of
/// se(n) rather than computed with matrices.
///
/// ```text
/// [Ω_ij, Ω_kl] = δ_jk Ω_il + δ_il Ω_jk + δ_jl Ω_ki + δ_ik Ω_lj
/// [E_i,  E_j ] = 0
/// [Ω_ij, E_k ] = δ_jk E_i - δ_ik E_j
/// ```
pub fn structural_bracket(a: &BasisElement, b: &BasisElement) -> Result<SignedBasisTerm> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let n = a.n();
    let delta = |x: usize, y: usize| x == y;
    let mut terms: Vec<SignedBasisTerm> = Vec::with_capacity(2);
    match (a.kind(), b.kind()) {
        (BasisKind::Rotation(i, j), BasisKind::Rotation(k, l)) => {
            if delta(j, k) {
                terms.push(SignedBasisTerm::rotation(n, i, l));
            }
            if delta(i, l) {
                terms.push(SignedBasisTerm::rotation(n, j, k));
            }
            if delta(j, l) {
                terms.push(SignedBasisTerm::rotation(n, k, i));
            }
            if delta(i, k) {
                terms.push(SignedBasisTerm::rotation(n, l, j));
            }
        }
        (BasisKind::Rotation(i, j), BasisKind::Translation(k)) => {
            if delta(j, k) {
                terms.push(SignedBasisTerm::translation(n, i));
            }
            if delta(i, k) {
                terms.push(-SignedBasisTerm::translation(n, j));
            }
        }
        (BasisKind::Translation(_), BasisKind::Rotation(..)) => {
            return structural_bracket(b, a).map(|t| -t);
        }
        (BasisKind::Translation(_), BasisKind::Translation(_)) => {}
    }
    Ok(collapse(terms))
}

/// Sums signed terms that all name at most one distinct basis element.
fn collapse(terms: Vec<SignedBasisTerm>) -> SignedBasisTerm {
    let mut coefficient = 0i8;
    let mut element = None;
    for t in terms.into_iter().filter(|t| !t.is_zero()) {
        match element {
            None => element = t.element(),
            Some(e) => assert_eq!(
                Some(e),
                t.element(),
                "basis bracket produced two distinct basis elements"
            ),
        }
        coefficient += t.coefficient();
    }
    match element {
        Some(e) if coefficient != 0 => SignedBasisTerm::new(coefficient, e),
        _ => SignedBasisTerm::ZERO,
    }
}

/// One derived-distribution step: adjoin every nonzero pairwise bracket.
pub fn derived_step(d: &CanonicalSubspace) -> CanonicalSubspace {
    let elems: Vec<BasisElement> = d.iter().copied().collect();
    let mut out = d.clone();
    for (idx, a) in elems.iter().enumerate() {
        for b in &elems[idx + 1..] {
            let term = structural_bracket(a, b).expect("elements share a dimension");
            if let Some(e) = term.element() {
                out.insert_unchecked(e);
            }
        }
    }
    out
}

/// The derived series `D^(0), D^(1), ...` up to and including its first
/// fixed point. Panics if the series has not stabilized by `D^(n)`.
pub fn derived_series(d: &CanonicalSubspace) -> Vec<CanonicalSubspace> {
    let n = d.n();
    let mut series = vec![d.clone()];
    loop {
        let last = series.last().expect("non-empty");
        let next = derived_step(last);
        if next == *last {
            return series;
        }
        assert!(
            series.len() <= n,
            "derived series of a subspace of se({n}) did not stabilize within {n} steps"
        );
        series.push(next);
    }
}

/// The Lie subalgebra generated by a canonical subspace.
pub fn lie_closure(d: &CanonicalSubspace) -> CanonicalSubspace {
    derived_series(d).pop().expect("non-empty")
}

/// Exact Lie algebraic rank condition: the generated subalgebra is all of se(n).
pub fn larc_exact(d: &CanonicalSubspace) -> bool {
    lie_closure(d).is_full()
}
