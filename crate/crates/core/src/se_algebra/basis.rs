use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Dimension of se(n): `n(n-1)/2` rotations plus `n` translations.
pub const fn se_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKind {
    /// Rotation generator in the `(i, j)` plane, `1 <= i < j <= n`.
    Rotation(usize, usize),
    /// Translation generator along axis `k`, `1 <= k <= n`.
    Translation(usize),
}

/// A member of the standard basis of se(n).
///
/// Indices are 1-based. Rotation indices are always stored in canonical
/// order `i < j`; use [`SignedBasisTerm::rotation`] to build a rotation from
/// an arbitrary ordered pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    n: usize,
    kind: BasisKind,
}

impl BasisElement {
    pub fn rotation(n: usize, i: usize, j: usize) -> Result<Self> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::InvalidBasis {
                n,
                reason: format!("rotation ({i}, {j}) needs 1 <= i < j <= n"),
            });
        }
        Ok(Self {
            n,
            kind: BasisKind::Rotation(i, j),
        })
    }

    pub fn translation(n: usize, k: usize) -> Result<Self> {
        if !(1 <= k && k <= n) {
            return Err(Error::InvalidBasis {
                n,
                reason: format!("translation {k} needs 1 <= k <= n"),
            });
        }
        Ok(Self {
            n,
            kind: BasisKind::Translation(k),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn is_rotation(&self) -> bool {
        matches!(self.kind, BasisKind::Rotation(..))
    }

    /// Position of this element in the coordinate ordering used by
    /// [`all_basis`]: rotations in lexicographic order, then translations.
    pub fn index(&self) -> usize {
        let n = self.n;
        match self.kind {
            BasisKind::Rotation(i, j) => {
                // rows 1..i-1 contribute (n - r) pairs each
                let before: usize = (1..i).map(|r| n - r).sum();
                before + (j - i - 1)
            }
            BasisKind::Translation(k) => n * (n - 1) / 2 + (k - 1),
        }
    }

    /// Matrix entry `(row, col)` (1-based) carrying the `+1` of this element.
    pub fn entry(&self) -> (usize, usize) {
        match self.kind {
            BasisKind::Rotation(i, j) => (i, j),
            BasisKind::Translation(k) => (k, self.n + 1),
        }
    }

    pub(crate) fn unchecked(n: usize, kind: BasisKind) -> Self {
        Self { n, kind }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BasisKind::Rotation(i, j) => write!(f, "Omega_{i}{j}"),
            BasisKind::Translation(k) => write!(f, "E_{k}({})", self.n + 1),
        }
    }
}

/// The full standard basis of se(n), in coordinate order.
pub fn all_basis(n: usize) -> Vec<BasisElement> {
    let mut out = Vec::with_capacity(se_dim(n));
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(BasisElement::unchecked(n, BasisKind::Rotation(i, j)));
        }
    }
    for k in 1..=n {
        out.push(BasisElement::unchecked(n, BasisKind::Translation(k)));
    }
    out
}

/// `0` or `±1` times a single basis element.
///
/// Every bracket of two standard basis elements of se(n) has this shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBasisTerm {
    coefficient: i8,
    element: Option<BasisElement>,
}

impl SignedBasisTerm {
    pub const ZERO: Self = Self {
        coefficient: 0,
        element: None,
    };

    pub fn new(coefficient: i8, element: BasisElement) -> Self {
        match coefficient {
            0 => Self::ZERO,
            c => Self {
                coefficient: c.signum(),
                element: Some(element),
            },
        }
    }

    /// `Ω̃_ij` for an arbitrary ordered pair: zero when `i == j`, and
    /// `-Ω̃_ji` when `i > j`.
    pub fn rotation(n: usize, i: usize, j: usize) -> Self {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Self::ZERO,
            Less => Self::new(1, BasisElement::unchecked(n, BasisKind::Rotation(i, j))),
            Greater => Self::new(-1, BasisElement::unchecked(n, BasisKind::Rotation(j, i))),
        }
    }

    pub fn translation(n: usize, k: usize) -> Self {
        Self::new(1, BasisElement::unchecked(n, BasisKind::Translation(k)))
    }

    pub fn coefficient(&self) -> i8 {
        self.coefficient
    }

    pub fn element(&self) -> Option<BasisElement> {
        self.element
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient == 0
    }
}

impl std::ops::Neg for SignedBasisTerm {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coefficient: -self.coefficient,
            element: self.element,
        }
    }
}

/// A canonical subspace of se(n): the span of a subset of the standard basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalSubspace {
    n: usize,
    generators: BTreeSet<BasisElement>,
}

impl CanonicalSubspace {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            generators: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            generators: all_basis(n).into_iter().collect(),
        }
    }

    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = BasisElement>) -> Result<Self> {
        let mut out = Self::empty(n);
        for e in elements {
            out.insert(e)?;
        }
        Ok(out)
    }

    /// Subspace spanned by the basis elements whose coordinate index has
    /// its bit set in `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let generators = all_basis(n)
            .into_iter()
            .filter(|b| mask >> b.index() & 1 == 1)
            .collect();
        Self { n, generators }
    }

    pub fn insert(&mut self, element: BasisElement) -> Result<bool> {
        if element.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: element.n(),
            });
        }
        Ok(self.generators.insert(element))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, element: &BasisElement) -> bool {
        self.generators.contains(element)
    }

    pub fn iter(&self) -> impl Iterator<Item = &BasisElement> + '_ {
        self.generators.iter()
    }

    /// Dimension of the subspace.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.generators.len() == se_dim(self.n)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.generators.is_subset(&other.generators)
    }

    pub(crate) fn insert_unchecked(&mut self, element: BasisElement) -> bool {
        self.generators.insert(element)
    }
}
