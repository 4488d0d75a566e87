use super::graph::{Edge, PatternGraph};

/// One round of the solid/broken transitive closure.
///
/// For every pair of edges sharing a middle vertex: solid + solid adds the
/// solid edge joining the outer endpoints, solid + broken adds the broken
/// edge from the solid edge's far endpoint to `n+1`, and broken + broken
/// adds nothing.
pub fn closure_step(g: &PatternGraph) -> PatternGraph {
    let n = g.n();
    let mut solid_adj: Vec<Vec<usize>> = vec![Vec::new(); n + 2];
    for &(u, v) in g.solid() {
        solid_adj[u].push(v);
        solid_adj[v].push(u);
    }
    let mut out = g.clone();
    for mid in 1..=n {
        let nbrs = &solid_adj[mid];
        for (a_idx, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[a_idx + 1..] {
                out.insert_solid_unchecked(ordered(a, b));
            }
        }
        if g.broken().contains(&(mid, n + 1)) {
            for &a in nbrs {
                out.insert_broken_unchecked((a, n + 1));
            }
        }
    }
    out
}

fn ordered(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The sequence `G^(0), G^(1), ...` of transitive closures.
///
/// `steps` stops at the first fixed point, so `steps[converged_at]` is the
/// transitive closure and applying [`closure_step`] to it changes nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTrace {
    steps: Vec<PatternGraph>,
}

impl ClosureTrace {
    pub fn steps(&self) -> &[PatternGraph] {
        &self.steps
    }

    pub fn converged_at(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn initial(&self) -> &PatternGraph {
        &self.steps[0]
    }

    pub fn closure(&self) -> &PatternGraph {
        self.steps.last().expect("trace is never empty")
    }

    /// `G^(l)` for any `l`; steps past convergence repeat the closure.
    pub fn at(&self, l: usize) -> &PatternGraph {
        &self.steps[l.min(self.converged_at())]
    }
}

/// Iterates [`closure_step`] to its fixed point. Panics if the fixed point
/// is not reached by step `n`.
pub fn transitive_closure(g: &PatternGraph) -> ClosureTrace {
    let n = g.n();
    let mut steps = vec![g.clone()];
    loop {
        let last = steps.last().expect("non-empty");
        let next = closure_step(last);
        if next == *last {
            return ClosureTrace { steps };
        }
        assert!(
            steps.len() <= n,
            "transitive closure on {} vertices did not converge within {n} steps",
            n + 1
        );
        steps.push(next);
    }
}
