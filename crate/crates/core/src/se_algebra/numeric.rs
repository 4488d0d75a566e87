use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::se_dim;
use super::dense::{dense_bracket, dense_of, DenseElement};
use crate::error::{Error, Result};
use crate::pattern_graph::Pattern;

/// Default relative rank tolerance for [`larc_numeric`].
pub const DEFAULT_TOL: f64 = 1e-9;

/// Coefficients drawn for realizations stay at least this far from zero.
pub const MIN_COEFFICIENT: f64 = 1e-3;

/// A random matrix in `B_Λ`, deterministic under `seed`.
pub fn sample_realization(pattern: &Pattern, seed: u64) -> DenseElement<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_realization_with(pattern, &mut rng)
}

/// Weights each basis element of `BS_Λ` by a coefficient drawn uniformly
/// from `[-1, -MIN_COEFFICIENT] ∪ [MIN_COEFFICIENT, 1]`.
pub fn sample_realization_with<R: Rng + ?Sized>(pattern: &Pattern, rng: &mut R) -> DenseElement<f64> {
    let mut out = DenseElement::zero(pattern.n());
    for b in pattern.basis().iter() {
        let magnitude = rng.gen_range(MIN_COEFFICIENT..=1.0);
        let c = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
        out.add_scaled_basis(b, c);
    }
    out
}

/// Orthonormal basis of a growing subspace of coordinate space.
struct Span {
    basis: Vec<Vec<f64>>,
}

impl Span {
    fn residual(&self, v: &[f64]) -> Vec<f64> {
        let mut r = v.to_vec();
        // two passes of modified Gram-Schmidt keep the residual orthogonal
        for _ in 0..2 {
            for q in &self.basis {
                let p = dot(q, &r);
                for (x, y) in r.iter_mut().zip(q) {
                    *x -= p * y;
                }
            }
        }
        r
    }

    /// Adds `v` when its residual norm exceeds `threshold`.
    fn try_push(&mut self, v: &[f64], threshold: f64) -> bool {
        let r = self.residual(v);
        let norm = dot(&r, &r).sqrt();
        if norm > threshold {
            self.basis.push(r.into_iter().map(|x| x / norm).collect());
            true
        } else {
            false
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dimension of the Lie algebra generated by `mats`, computed in floating
/// point over standard-basis coordinates.
///
/// Inputs are normalized to unit norm, so every vector entering the span
/// (inputs and brackets of orthonormal basis vectors alike) is measured
/// against a basis whose largest norm is 1: a candidate is independent iff
/// its residual after projection exceeds `tol`.
pub fn generated_dimension(mats: &[DenseElement<f64>], tol: f64) -> Result<usize> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    let n = first.n();
    for m in mats {
        if m.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: m.n() });
        }
    }
    let dim = se_dim(n);
    let coords: Vec<Vec<f64>> = mats.iter().map(|m| m.coordinates()).collect();
    let max_norm = coords
        .iter()
        .map(|c| dot(c, c).sqrt())
        .fold(0.0f64, f64::max);
    if max_norm == 0.0 {
        return Ok(0);
    }

    let mut span = Span { basis: Vec::new() };
    for c in &coords {
        let scaled: Vec<f64> = c.iter().map(|x| x / max_norm).collect();
        span.try_push(&scaled, tol);
    }

    // Bracket every pair until no new direction appears. Pairs already
    // bracketed are skipped by tracking how far the previous pass reached.
    let mut done = 0;
    while done < span.basis.len() && span.basis.len() < dim {
        let upto = span.basis.len();
        let mats_now: Vec<DenseElement<f64>> = span
            .basis
            .iter()
            .map(|q| DenseElement::from_coordinates(n, q).expect("coordinate length"))
            .collect();
        'outer: for j in done..upto {
            for i in 0..j {
                let br = dense_bracket(&mats_now[i], &mats_now[j])?;
                span.try_push(&br.coordinates(), tol);
                if span.basis.len() == dim {
                    break 'outer;
                }
            }
        }
        done = upto;
    }
    Ok(span.basis.len())
}

/// Numerical Lie algebraic rank condition: the matrices generate all of se(n).
pub fn larc_numeric(mats: &[DenseElement<f64>], tol: f64) -> Result<bool> {
    let rank = generated_dimension(mats, tol)?;
    Ok(mats.first().is_some_and(|m| rank == se_dim(m.n())))
}

/// Dense float matrices of every element of `BS_Λ`.
pub fn basis_realization(pattern: &Pattern) -> Vec<DenseElement<f64>> {
    pattern.basis().iter().map(dense_of::<f64>).collect()
}
