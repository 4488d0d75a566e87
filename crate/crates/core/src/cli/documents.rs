//! JSON input documents.
//!
//! ```json
//! {"n": 3, "lambda": [[1,2],[2,3],[1,4]]}
//! {"n": 3, "costs": [[1,2,1.0],[1,3,5.0],[2,3,2.0],[1,4,3.0],[2,4,1.0],[3,4,4.0]]}
//! ```
//!
//! Indices are 1-based. A rotation entry given as `(j, i)` with `j > i` is
//! the same degree of freedom as `(i, j)` and is accepted with a warning.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern_graph::{validate_entry, Pattern};
use crate::sparse_design::CostMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternDocument {
    pub n: i64,
    pub lambda: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostDocument {
    pub n: i64,
    pub costs: Vec<(i64, i64, f64)>,
}

fn dimension(n: i64) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("n must be a positive integer, got {n}")));
    }
    Ok(n as usize)
}

fn index(v: i64, i: i64, j: i64) -> Result<usize> {
    if v < 1 {
        return Err(Error::InvalidArgument(format!("entry [{i}, {j}]: indices are 1-based")));
    }
    Ok(v as usize)
}

/// Canonical form of a raw entry, plus a warning when it was mirrored.
fn canonical_entry(n: usize, i: usize, j: usize) -> Result<((usize, usize), Option<String>)> {
    if i > j && i <= n {
        validate_entry(n, j, i)?;
        let warning = format!("entry [{i}, {j}] read as [{j}, {i}]");
        return Ok(((j, i), Some(warning)));
    }
    validate_entry(n, i, j)?;
    Ok(((i, j), None))
}

impl PatternDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("malformed pattern document: {e}")))
    }

    /// Validates and canonicalizes; returns the pattern and any warnings.
    pub fn to_pattern(&self) -> Result<(Pattern, Vec<String>)> {
        let n = dimension(self.n)?;
        let mut entries = Vec::with_capacity(self.lambda.len());
        let mut warnings = Vec::new();
        for raw in &self.lambda {
            let [i, j] = raw[..] else {
                return Err(Error::InvalidArgument(format!(
                    "entry {raw:?}: expected a pair of indices"
                )));
            };
            let (e, w) = canonical_entry(n, index(i, i, j)?, index(j, i, j)?)?;
            entries.push(e);
            warnings.extend(w);
        }
        Ok((Pattern::new(n, entries)?, warnings))
    }

    pub fn from_pattern(p: &Pattern) -> Self {
        Self {
            n: p.n() as i64,
            lambda: p.entries().map(|(i, j)| vec![i as i64, j as i64]).collect(),
        }
    }
}

impl CostDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("malformed cost document: {e}")))
    }

    pub fn to_costs(&self, allow_zero_broken: bool) -> Result<(CostMatrix<f64>, Vec<String>)> {
        let n = dimension(self.n)?;
        let mut solid = BTreeMap::new();
        let mut broken = vec![None; n];
        let mut seen = BTreeSet::new();
        let mut warnings = Vec::new();
        for &(i, j, value) in &self.costs {
            let (e, w) = canonical_entry(n, index(i, i, j)?, index(j, i, j)?)?;
            warnings.extend(w);
            if !seen.insert(e) {
                return Err(Error::InvalidCost(format!("duplicate cost for ({}, {})", e.0, e.1)));
            }
            if e.1 == n + 1 {
                broken[e.0 - 1] = Some(value);
            } else {
                solid.insert(e, value);
            }
        }
        let broken = broken
            .into_iter()
            .enumerate()
            .map(|(idx, c)| c.ok_or_else(|| Error::InvalidCost(format!("missing cost for ({}, {})", idx + 1, n + 1))))
            .collect::<Result<Vec<_>>>()?;
        let costs = if allow_zero_broken {
            CostMatrix::new_permissive(n, solid, broken)?
        } else {
            CostMatrix::new(n, solid, broken)?
        };
        Ok((costs, warnings))
    }
}
