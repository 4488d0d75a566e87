use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::se_algebra::{BasisElement, CanonicalSubspace};

/// The index set `Λ` of permitted nonzero entries of matrices in se(n).
///
/// Entries are 1-based `(i, j)` pairs with `1 <= i <= n` and `i < j <= n+1`.
/// Pairs with `j <= n` are rotation degrees of freedom; pairs `(k, n+1)`
/// are translations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternRepr", into = "PatternRepr")]
pub struct Pattern {
    n: usize,
    entries: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    n: usize,
    lambda: Vec<[usize; 2]>,
}

impl TryFrom<PatternRepr> for Pattern {
    type Error = Error;

    fn try_from(r: PatternRepr) -> Result<Self> {
        Pattern::new(r.n, r.lambda.into_iter().map(|[i, j]| (i, j)))
    }
}

impl From<Pattern> for PatternRepr {
    fn from(p: Pattern) -> Self {
        PatternRepr {
            n: p.n,
            lambda: p.entries.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

/// Checks a single canonical entry against the shape of se(n).
pub fn validate_entry(n: usize, i: usize, j: usize) -> Result<()> {
    let fail = |reason: &str| {
        Err(Error::InvalidEntry {
            i,
            j,
            reason: reason.to_string(),
        })
    };
    if i == 0 || j == 0 {
        return fail("indices are 1-based");
    }
    if i > n {
        return fail("first index must be ≤ n (row n+1 of se(n) is zero)");
    }
    if j > n + 1 {
        return fail("second index must be ≤ n+1");
    }
    if i == j {
        return fail("diagonal entries of se(n) are zero");
    }
    if i > j {
        return fail("entries must be given with i < j");
    }
    Ok(())
}

impl Pattern {
    /// Builds a pattern from canonical `(i, j)` pairs; duplicates collapse.
    pub fn new(n: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for (i, j) in entries {
            validate_entry(n, i, j)?;
            set.insert((i, j));
        }
        Ok(Self { n, entries: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            entries: BTreeSet::new(),
        }
    }

    /// Every admissible entry.
    pub fn full(n: usize) -> Self {
        Self {
            n,
            entries: all_entries(n).into_iter().collect(),
        }
    }

    /// Pattern whose entries are the positions of set bits of `mask` in
    /// [`all_entries`] order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let entries = all_entries(n)
            .into_iter()
            .enumerate()
            .filter(|(idx, _)| mask >> idx & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Self { n, entries }
    }

    /// Every pattern for dimension `n`, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Pattern> {
        let count = all_entries(n).len();
        assert!(count < 64, "too many entries to enumerate for n = {n}");
        (0..1u64 << count).map(move |mask| Pattern::from_mask(n, mask))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.entries.contains(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().copied()
    }

    pub fn is_subset(&self, other: &Pattern) -> bool {
        self.n == other.n && self.entries.is_subset(&other.entries)
    }

    /// `BS_Λ`: the standard basis elements selected by the pattern.
    pub fn basis(&self) -> CanonicalSubspace {
        let n = self.n;
        let elems = self.entries.iter().map(|&(i, j)| {
            if j == n + 1 {
                BasisElement::translation(n, i)
            } else {
                BasisElement::rotation(n, i, j)
            }
            .expect("pattern entries are validated")
        });
        CanonicalSubspace::from_elements(n, elems).expect("same dimension")
    }

    /// The pattern whose `BS_Λ` is the given canonical subspace.
    pub fn from_basis(d: &CanonicalSubspace) -> Self {
        Self {
            n: d.n(),
            entries: d.iter().map(|b| b.entry()).collect(),
        }
    }
}

/// Every admissible canonical entry for dimension `n`: rotation pairs in
/// lexicographic order followed by translation pairs.
pub fn all_entries(n: usize) -> Vec<(usize, usize)> {
    crate::se_algebra::all_basis(n).iter().map(|b| b.entry()).collect()
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (idx, (i, j)) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}
