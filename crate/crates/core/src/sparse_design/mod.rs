//! Sparsest and minimum-cost structurally controllable patterns.
//!
//! A pattern of size `n` is structurally controllable exactly when its graph
//! is a spanning tree on `1..=n+1` whose restriction to `1..=n` is still a
//! spanning tree: a spanning tree of `K_n` built from rotation entries plus
//! a single translation entry.

mod cost;
mod spanning;

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::Serialize;

pub use cost::{CostMatrix, CostValue};
pub use spanning::{complete_edges, spanning_trees};

use crate::error::{Error, Result};
use crate::pattern_graph::{Edge, Pattern};

/// Largest `n` for which the minimal patterns are enumerated.
pub const MAX_ENUMERATION_N: usize = 7;

/// A minimal controllable pattern: a spanning tree on the rotation vertices
/// plus one translation entry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TreePattern {
    pattern: Pattern,
    solid_tree: Vec<Edge>,
    broken_edge: Edge,
}

impl TreePattern {
    /// `solid_tree` must be a spanning tree of `K_n` and `1 <= k <= n`.
    pub fn new(n: usize, solid_tree: Vec<Edge>, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if !(1..=n).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "translation entry ({k}, {}) out of range",
                n + 1
            )));
        }
        let mut solid_tree: Vec<Edge> = solid_tree
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        solid_tree.sort_unstable();
        solid_tree.dedup();
        if solid_tree.len() + 1 != n || !spans(n, &solid_tree) {
            return Err(Error::InvalidArgument(format!(
                "{solid_tree:?} is not a spanning tree on 1..={n}"
            )));
        }
        let broken_edge = (k, n + 1);
        let pattern = Pattern::new(n, solid_tree.iter().copied().chain([broken_edge]))?;
        Ok(Self {
            pattern,
            solid_tree,
            broken_edge,
        })
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn solid_tree(&self) -> &[Edge] {
        &self.solid_tree
    }

    pub fn broken_edge(&self) -> Edge {
        self.broken_edge
    }

    /// Objective value `Σ_{(i,j)∈Λ} C(i,j)`.
    pub fn cost<W: CostValue>(&self, costs: &CostMatrix<W>) -> W {
        self.pattern
            .entries()
            .fold(W::zero(), |acc, (i, j)| acc + costs.entry_cost(i, j))
    }
}

/// Union-find check that `edges` connect all of `1..=n`.
fn spans(n: usize, edges: &[Edge]) -> bool {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in edges {
        if !(1..=n).contains(&u) || !(1..=n).contains(&v) {
            return false;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

/// The path `1-2-...-n` with translation entry `(1, n+1)`.
pub fn sparsest_pattern(n: usize) -> Result<TreePattern> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let path = (1..n).map(|i| (i, i + 1)).collect();
    TreePattern::new(n, path, 1)
}

/// Every minimal structurally controllable pattern, `n^(n-1)` in total,
/// sorted by pattern.
pub fn enumerate_minimal(n: usize) -> Result<Vec<TreePattern>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max: MAX_ENUMERATION_N,
        });
    }
    let trees = spanning_trees(n, &complete_edges(n));
    let mut out: Vec<TreePattern> = trees
        .par_iter()
        .flat_map_iter(|t| (1..=n).map(move |k| TreePattern::new(n, t.clone(), k).expect("enumerated tree")))
        .collect();
    out.sort();
    Ok(out)
}

/// Heap key ordered by `(weight, u, v)`.
#[derive(Debug, Clone, Copy)]
struct PrimKey<W> {
    weight: W,
    edge: Edge,
    to: usize,
}

impl<W: CostValue> PartialEq for PrimKey<W> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<W: CostValue> Eq for PrimKey<W> {}

impl<W: CostValue> PartialOrd for PrimKey<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<W: CostValue> Ord for PrimKey<W> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .partial_cmp(&other.weight)
            .expect("costs are validated finite")
            .then(self.edge.cmp(&other.edge))
    }
}

/// Prim's algorithm on `K_n` with edge weights `w(i, j) = C(i,j) + C(j,i)`,
/// ties broken by `(weight, i, j)`.
fn minimum_spanning_tree<W: CostValue>(costs: &CostMatrix<W>) -> Vec<Edge> {
    let n = costs.n();
    let mut visited = vec![false; n + 1];
    let mut heap = BinaryHeap::new();
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    let push_from = |u: usize, visited: &[bool], heap: &mut BinaryHeap<Reverse<PrimKey<W>>>| {
        for v in 1..=n {
            if v != u && !visited[v] {
                let c = costs.solid_cost(u, v);
                heap.push(Reverse(PrimKey {
                    weight: c + c,
                    edge: if u < v { (u, v) } else { (v, u) },
                    to: v,
                }));
            }
        }
    };
    visited[1] = true;
    push_from(1, &visited, &mut heap);
    while let Some(Reverse(key)) = heap.pop() {
        if visited[key.to] {
            continue;
        }
        visited[key.to] = true;
        tree.push(key.edge);
        push_from(key.to, &visited, &mut heap);
    }
    tree.sort_unstable();
    tree
}

/// The cheapest translation entry `k`, smallest index on ties.
fn cheapest_broken<W: CostValue>(costs: &CostMatrix<W>) -> usize {
    (1..=costs.n())
        .min_by(|&a, &b| {
            costs
                .broken_cost(a)
                .partial_cmp(&costs.broken_cost(b))
                .expect("costs are validated finite")
                .then(a.cmp(&b))
        })
        .expect("n >= 1")
}

/// Minimum-cost structurally controllable pattern: a minimum spanning tree
/// on the rotation vertices plus the cheapest translation entry.
pub fn min_cost_pattern<W: CostValue>(costs: &CostMatrix<W>) -> (TreePattern, W) {
    let tree = minimum_spanning_tree(costs);
    let k = cheapest_broken(costs);
    let pattern = TreePattern::new(costs.n(), tree, k).expect("MST spans K_n");
    let total = pattern.cost(costs);
    (pattern, total)
}

/// Exhaustive minimum of the objective over every minimal pattern.
pub fn brute_force_min_cost<W: CostValue>(costs: &CostMatrix<W>) -> Result<W> {
    let all = enumerate_minimal(costs.n())?;
    let best = all
        .iter()
        .map(|t| t.cost(costs))
        .reduce(|a, b| if b < a { b } else { a })
        .expect("at least one tree");
    Ok(best)
}
