use std::collections::{BTreeSet, VecDeque};

use super::pattern::Pattern;
use crate::error::{Error, Result};
use crate::se_algebra::{BasisElement, BasisKind, CanonicalSubspace};

/// Undirected edge `(u, v)` with `u < v`, 1-based vertices.
pub type Edge = (usize, usize);

/// Graph on vertices `1..=n+1` whose solid edges lie inside `1..=n` and
/// whose broken edges all end at vertex `n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternGraph {
    n: usize,
    solid: BTreeSet<Edge>,
    broken: BTreeSet<Edge>,
}

fn canonical(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl PatternGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            solid: BTreeSet::new(),
            broken: BTreeSet::new(),
        }
    }

    /// `K_{n+1}` with its solid/broken split.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                g.solid.insert((i, j));
            }
            g.broken.insert((i, n + 1));
        }
        g
    }

    pub fn new(
        n: usize,
        solid: impl IntoIterator<Item = Edge>,
        broken: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in solid {
            g.add_solid(u, v)?;
        }
        for (u, v) in broken {
            g.add_broken(u, v)?;
        }
        Ok(g)
    }

    pub fn add_solid(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n;
        if u == v || !(1..=n).contains(&u) || !(1..=n).contains(&v) {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: format!("solid edges join two distinct vertices in 1..={n}"),
            });
        }
        Ok(self.solid.insert(canonical(u, v)))
    }

    pub fn add_broken(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n;
        let (k, top) = canonical(u, v);
        if top != n + 1 || !(1..=n).contains(&k) {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: format!("broken edges join a vertex in 1..={n} to vertex {}", n + 1),
            });
        }
        Ok(self.broken.insert((k, top)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn solid(&self) -> &BTreeSet<Edge> {
        &self.solid
    }

    pub fn broken(&self) -> &BTreeSet<Edge> {
        &self.broken
    }

    pub fn edge_count(&self) -> usize {
        self.solid.len() + self.broken.len()
    }

    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.n == other.n && self.solid.is_subset(&other.solid) && self.broken.is_subset(&other.broken)
    }

    /// The union of both edge sets equals `K_{n+1}`.
    pub fn is_complete(&self) -> bool {
        let n = self.n;
        self.solid.len() == n * (n - 1) / 2 && self.broken.len() == n
    }

    /// Solid subgraph connected on `1..=n`. The single vertex graph counts
    /// as connected.
    pub fn solid_connected(&self) -> bool {
        connected(self.n, self.solid.iter().copied())
    }

    /// Whole graph connected on `1..=n+1`.
    pub fn full_connected(&self) -> bool {
        connected(self.n + 1, self.solid.iter().chain(&self.broken).copied())
    }

    pub(crate) fn insert_solid_unchecked(&mut self, e: Edge) -> bool {
        self.solid.insert(e)
    }

    pub(crate) fn insert_broken_unchecked(&mut self, e: Edge) -> bool {
        self.broken.insert(e)
    }
}

/// Breadth-first connectivity on vertices `1..=vertices`.
fn connected(vertices: usize, edges: impl Iterator<Item = Edge>) -> bool {
    if vertices <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); vertices + 1];
    for (u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; vertices + 1];
    let mut queue = VecDeque::from([1]);
    seen[1] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == vertices
}

/// Pattern graph: rotation entries become solid edges, translation entries
/// broken edges.
pub fn graph_of_pattern(pattern: &Pattern) -> PatternGraph {
    let n = pattern.n();
    let mut g = PatternGraph::empty(n);
    for (i, j) in pattern.entries() {
        if j == n + 1 {
            g.broken.insert((i, j));
        } else {
            g.solid.insert((i, j));
        }
    }
    g
}

/// The pattern whose graph is `g`.
pub fn pattern_of_graph(g: &PatternGraph) -> Pattern {
    Pattern::new(g.n, g.solid.iter().chain(&g.broken).copied()).expect("graph edges are valid entries")
}

pub fn graph_of_subspace(d: &CanonicalSubspace) -> PatternGraph {
    let n = d.n();
    let mut g = PatternGraph::empty(n);
    for b in d.iter() {
        match b.kind() {
            BasisKind::Rotation(i, j) => g.solid.insert((i, j)),
            BasisKind::Translation(k) => g.broken.insert((k, n + 1)),
        };
    }
    g
}

pub fn subspace_of_graph(g: &PatternGraph) -> CanonicalSubspace {
    let n = g.n;
    let elems = g
        .solid
        .iter()
        .map(|&(i, j)| BasisElement::rotation(n, i, j))
        .chain(g.broken.iter().map(|&(k, _)| BasisElement::translation(n, k)))
        .map(|b| b.expect("graph edges are valid basis indices"));
    CanonicalSubspace::from_elements(n, elems).expect("same dimension")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_31() -> Pattern {
        Pattern::new(3, [(1, 2), (2, 3), (1, 4)]).unwrap()
    }

    fn example_32() -> Pattern {
        Pattern::new(3, [(1, 4), (3, 4), (1, 2)]).unwrap()
    }

    #[test]
    fn graph_of_examples() {
        let g = graph_of_pattern(&example_31());
        assert_eq!(g, PatternGraph::new(3, [(1, 2), (2, 3)], [(1, 4)]).unwrap());
        let g = graph_of_pattern(&example_32());
        assert_eq!(g, PatternGraph::new(3, [(1, 2)], [(1, 4), (3, 4)]).unwrap());
        assert_eq!(graph_of_pattern(&Pattern::empty(3)), PatternGraph::empty(3));
    }

    #[test]
    fn edge_validation() {
        let mut g = PatternGraph::empty(3);
        assert!(g.add_solid(1, 4).is_err());
        assert!(g.add_solid(2, 2).is_err());
        assert!(g.add_broken(1, 2).is_err());
        assert!(g.add_broken(4, 4).is_err());
        assert!(g.add_broken(4, 2).unwrap());
        assert!(g.add_solid(3, 1).unwrap());
        assert!(!g.add_solid(1, 3).unwrap());
        assert_eq!(g.solid().iter().copied().collect::<Vec<_>>(), vec![(1, 3)]);
        assert_eq!(g.broken().iter().copied().collect::<Vec<_>>(), vec![(2, 4)]);
    }

    #[test]
    fn completeness_boundary_n1() {
        assert!(!PatternGraph::empty(1).is_complete());
        assert!(PatternGraph::new(1, [], [(1, 2)]).unwrap().is_complete());
        assert!(PatternGraph::complete(4).is_complete());
    }

    #[test]
    fn connectivity_of_example_32() {
        let g = graph_of_pattern(&example_32());
        assert!(g.full_connected());
        assert!(!g.solid_connected());
        assert!(PatternGraph::empty(1).solid_connected());
        assert!(!PatternGraph::empty(1).full_connected());
    }

    #[test]
    fn subspace_correspondence() {
        let d = example_31().basis();
        let g = graph_of_subspace(&d);
        assert_eq!(g, graph_of_pattern(&example_31()));
        assert_eq!(subspace_of_graph(&g), d);
        assert_eq!(graph_of_subspace(&CanonicalSubspace::empty(2)), PatternGraph::empty(2));
        assert_eq!(
            graph_of_subspace(&CanonicalSubspace::full(2)),
            PatternGraph::new(2, [(1, 2)], [(1, 3), (2, 3)]).unwrap()
        );
        assert_eq!(subspace_of_graph(&PatternGraph::empty(3)), CanonicalSubspace::empty(3));
    }

    #[test]
    fn pattern_round_trip() {
        for p in Pattern::all(3) {
            assert_eq!(pattern_of_graph(&graph_of_pattern(&p)), p);
        }
    }
}
