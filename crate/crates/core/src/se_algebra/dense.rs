use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

use super::basis::{all_basis, se_dim, BasisElement, BasisKind};
use crate::error::{Error, Result};

/// Scalar type usable for dense se(n) matrices: integers, rationals or floats.
pub trait Scalar: Copy + Num + Neg<Output = Self> + PartialEq + Debug {}

impl<T> Scalar for T where T: Copy + Num + Neg<Output = T> + PartialEq + Debug {}

/// An `(n+1) x (n+1)` matrix representing an element of se(n).
///
/// Accessors take 1-based `(row, col)` indices.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseElement<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> DenseElement<T> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![T::zero(); (n + 1) * (n + 1)],
        }
    }

    /// Builds the matrix with the given coordinates in the standard basis.
    pub fn from_coordinates(n: usize, coords: &[T]) -> Result<Self> {
        if coords.len() != se_dim(n) {
            return Err(Error::InvalidArgument(format!(
                "se({n}) needs {} coordinates, got {}",
                se_dim(n),
                coords.len()
            )));
        }
        let mut out = Self::zero(n);
        for (b, &c) in all_basis(n).iter().zip(coords) {
            out.add_scaled_basis(b, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.entries[self.offset(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        let o = self.offset(row, col);
        self.entries[o] = value;
    }

    fn offset(&self, row: usize, col: usize) -> usize {
        assert!(
            (1..=self.n + 1).contains(&row) && (1..=self.n + 1).contains(&col),
            "index ({row}, {col}) out of range for se({})",
            self.n
        );
        (row - 1) * (self.n + 1) + (col - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    /// Skew-symmetric rotation block, zero last row, zero trailing corner.
    pub fn is_in_se(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                if self.get(i, j) != -self.get(j, i) {
                    return false;
                }
            }
        }
        (1..=n + 1).all(|j| self.get(n + 1, j).is_zero())
    }

    /// `self += c * b`.
    pub fn add_scaled_basis(&mut self, b: &BasisElement, c: T) {
        debug_assert_eq!(b.n(), self.n);
        match b.kind() {
            BasisKind::Rotation(i, j) => {
                let v = self.get(i, j) + c;
                self.set(i, j, v);
                let w = self.get(j, i) - c;
                self.set(j, i, w);
            }
            BasisKind::Translation(k) => {
                let v = self.get(k, self.n + 1) + c;
                self.set(k, self.n + 1, v);
            }
        }
    }

    /// Coordinates in the standard basis, in [`all_basis`] order. Assumes the
    /// matrix lies in se(n).
    pub fn coordinates(&self) -> Vec<T> {
        all_basis(self.n)
            .iter()
            .map(|b| {
                let (r, c) = b.entry();
                self.get(r, c)
            })
            .collect()
    }

    pub fn scale(&self, c: T) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|&v| v * c).collect(),
        }
    }

    fn matmul(&self, other: &Self) -> Self {
        let m = self.n + 1;
        let mut out = Self::zero(self.n);
        for r in 0..m {
            for k in 0..m {
                let a = self.entries[r * m + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..m {
                    let o = r * m + c;
                    out.entries[o] = out.entries[o] + a * other.entries[k * m + c];
                }
            }
        }
        out
    }
}

/// The matrix of a standard basis element.
pub fn dense_of<T: Scalar>(b: &BasisElement) -> DenseElement<T> {
    let mut out = DenseElement::zero(b.n());
    out.add_scaled_basis(b, T::one());
    out
}

/// Matrix commutator `AB - BA`.
pub fn dense_bracket<T: Scalar>(a: &DenseElement<T>, b: &DenseElement<T>) -> Result<DenseElement<T>> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let ab = a.matmul(b);
    let ba = b.matmul(a);
    Ok(DenseElement {
        n: a.n,
        entries: ab.entries.iter().zip(&ba.entries).map(|(&x, &y)| x - y).collect(),
    })
}
