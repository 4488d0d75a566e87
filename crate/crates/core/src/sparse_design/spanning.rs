//! Spanning-tree enumeration by frontier growth with bridge cut-off.
//!
//! Trees are grown from vertex `1`. At each level an edge from the tree to a
//! new vertex is taken off the frontier and every tree containing it is
//! listed recursively; the edge is then excluded and the next frontier edge
//! is tried, until the excluded edges would cut the last vertex off from the
//! tree. This partitions the trees, so each is produced exactly once.

use crate::pattern_graph::Edge;

struct Grower<'a> {
    adj: &'a [Vec<usize>],
    vertices: usize,
    in_tree: Vec<bool>,
    tree: Vec<Edge>,
    /// Directed `(in-tree, out-of-tree)` edges available for growth.
    frontier: Vec<Edge>,
    /// Canonical edges excluded by this branch and its ancestors.
    deleted: Vec<Edge>,
    out: Vec<Vec<Edge>>,
}

impl Grower<'_> {
    fn grow(&mut self) {
        if self.tree.len() + 1 == self.vertices {
            let mut t: Vec<Edge> = self.tree.iter().copied().map(canonical).collect();
            t.sort_unstable();
            self.out.push(t);
            return;
        }
        let mut excluded: Vec<Edge> = Vec::new();
        loop {
            let e = self.frontier.pop().expect("frontier of a connected graph is non-empty");
            let v = e.1;
            let saved = self.frontier.clone();

            self.in_tree[v] = true;
            self.tree.push(e);
            self.frontier.retain(|&(_, w)| w != v);
            for &w in &self.adj[v] {
                if !self.in_tree[w] {
                    self.frontier.push((v, w));
                }
            }
            self.grow();
            self.frontier = saved;
            self.tree.pop();
            self.in_tree[v] = false;

            excluded.push(e);
            self.deleted.push(canonical(e));
            // Stop once the excluded edges cut v off from the tree.
            if !self.reaches_tree(v) {
                break;
            }
        }
        while let Some(e) = excluded.pop() {
            self.deleted.pop();
            self.frontier.push(e);
        }
    }

    fn reaches_tree(&self, start: usize) -> bool {
        let mut seen = vec![false; self.vertices + 1];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if seen[w] || self.deleted.contains(&canonical((u, w))) {
                    continue;
                }
                if self.in_tree[w] {
                    return true;
                }
                seen[w] = true;
                stack.push(w);
            }
        }
        false
    }
}

fn canonical((u, v): Edge) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// All spanning trees of a connected graph on vertices `1..=vertices`,
/// each as a sorted list of `(u, v)` edges with `u < v`.
///
/// Returns an empty list when the graph is disconnected; a single vertex
/// has one (empty) spanning tree.
pub fn spanning_trees(vertices: usize, edges: &[Edge]) -> Vec<Vec<Edge>> {
    if vertices == 0 {
        return Vec::new();
    }
    let mut adj = vec![Vec::new(); vertices + 1];
    for &(u, v) in edges {
        assert!(u != v && (1..=vertices).contains(&u) && (1..=vertices).contains(&v));
        if !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut in_tree = vec![false; vertices + 1];
    in_tree[1] = true;
    let frontier = adj[1].iter().rev().map(|&w| (1, w)).collect();
    let mut g = Grower {
        adj: &adj,
        vertices,
        in_tree,
        tree: Vec::new(),
        frontier,
        deleted: Vec::new(),
        out: Vec::new(),
    };
    if vertices == 1 {
        return vec![Vec::new()];
    }
    if !is_connected(&adj, vertices) {
        return Vec::new();
    }
    g.grow();
    let mut out = g.out;
    out.sort();
    out
}

fn is_connected(adj: &[Vec<usize>], vertices: usize) -> bool {
    let mut seen = vec![false; vertices + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// Edges of `K_n` in lexicographic order.
pub fn complete_edges(n: usize) -> Vec<Edge> {
    (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))).collect()
}
