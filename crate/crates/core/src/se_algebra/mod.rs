//! Exact and numerical models of the Lie algebra se(n).
//!
//! The structural path works on canonical subspaces (spans of standard basis
//! elements) with integer bracket coefficients; no tolerance is involved.
//! The numerical path brackets arbitrary real matrices and measures rank in
//! standard-basis coordinates.

mod basis;
mod closure;
mod dense;
mod numeric;

pub use basis::{all_basis, se_dim, BasisElement, BasisKind, CanonicalSubspace, SignedBasisTerm};
pub use closure::{derived_series, derived_step, larc_exact, lie_closure, structural_bracket};
pub use dense::{dense_bracket, dense_of, DenseElement, Scalar};
pub use numeric::{
    basis_realization, generated_dimension, larc_numeric, sample_realization, sample_realization_with,
    DEFAULT_TOL, MIN_COEFFICIENT,
};
