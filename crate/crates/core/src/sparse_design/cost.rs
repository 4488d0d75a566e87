use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::Add;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Numeric type usable as an entry cost: floats or exact rationals.
pub trait CostValue: Copy + PartialOrd + Add<Output = Self> + Zero + Debug {
    /// Finite and comparable (rejects NaN and infinities for floats).
    fn is_finite_cost(&self) -> bool {
        true
    }
}

impl CostValue for f64 {
    fn is_finite_cost(&self) -> bool {
        self.is_finite()
    }
}

impl CostValue for Ratio<i64> {}

impl CostValue for i64 {}

/// Per-entry costs of a pattern in se(n).
///
/// Each rotation pair `(i, j)`, `i < j <= n`, is stored once; the mirrored
/// entry `(j, i)` shares it. Translation entries `(k, n+1)` carry their own
/// cost. The zero last row has no cost.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix<W> {
    n: usize,
    solid: BTreeMap<(usize, usize), W>,
    broken: Vec<W>,
}

impl<W: CostValue> CostMatrix<W> {
    /// Strict constructor: every cost must be positive.
    pub fn new(n: usize, solid: BTreeMap<(usize, usize), W>, broken: Vec<W>) -> Result<Self> {
        Self::build(n, solid, broken, false)
    }

    /// Like [`CostMatrix::new`] but allows zero translation costs.
    pub fn new_permissive(n: usize, solid: BTreeMap<(usize, usize), W>, broken: Vec<W>) -> Result<Self> {
        Self::build(n, solid, broken, true)
    }

    /// Every entry costs `one`.
    pub fn uniform(n: usize, one: W) -> Result<Self> {
        let solid = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .map(|e| (e, one))
            .collect();
        Self::new(n, solid, vec![one; n])
    }

    fn build(n: usize, solid: BTreeMap<(usize, usize), W>, broken: Vec<W>, allow_zero_broken: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let expected = n * (n - 1) / 2;
        for (&(i, j), c) in &solid {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidCost(format!(
                    "rotation cost key ({i}, {j}) needs 1 <= i < j <= {n}"
                )));
            }
            if !c.is_finite_cost() || *c <= W::zero() {
                return Err(Error::InvalidCost(format!("cost of ({i}, {j}) must be positive, got {c:?}")));
            }
        }
        if solid.len() != expected {
            let missing = (1..=n)
                .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
                .find(|e| !solid.contains_key(e))
                .expect("some pair is missing");
            return Err(Error::InvalidCost(format!("missing cost for ({}, {})", missing.0, missing.1)));
        }
        if broken.len() != n {
            return Err(Error::InvalidCost(format!(
                "expected {n} translation costs, got {}",
                broken.len()
            )));
        }
        for (idx, c) in broken.iter().enumerate() {
            let ok = c.is_finite_cost() && (*c > W::zero() || (allow_zero_broken && c.is_zero()));
            if !ok {
                return Err(Error::InvalidCost(format!(
                    "cost of ({}, {}) must be {}, got {c:?}",
                    idx + 1,
                    n + 1,
                    if allow_zero_broken { "non-negative" } else { "positive" }
                )));
            }
        }
        Ok(Self { n, solid, broken })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cost of the rotation pair `{i, j}` (either order).
    pub fn solid_cost(&self, i: usize, j: usize) -> W {
        let key = if i < j { (i, j) } else { (j, i) };
        self.solid[&key]
    }

    /// Cost of the translation entry `(k, n+1)`.
    pub fn broken_cost(&self, k: usize) -> W {
        self.broken[k - 1]
    }

    /// Cost `C(i, j)` of a single canonical pattern entry.
    pub fn entry_cost(&self, i: usize, j: usize) -> W {
        if j == self.n + 1 {
            self.broken_cost(i)
        } else {
            self.solid_cost(i, j)
        }
    }

    /// Returns a copy with different translation costs.
    pub fn with_broken(&self, broken: Vec<W>) -> Result<Self> {
        Self::build(self.n, self.solid.clone(), broken, true)
    }

    /// Returns a copy with different rotation costs.
    pub fn with_solid(&self, solid: BTreeMap<(usize, usize), W>) -> Result<Self> {
        Self::build(self.n, solid, self.broken.clone(), true)
    }
}
