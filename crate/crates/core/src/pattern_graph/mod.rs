//! Patterns, their solid/broken graphs, and the graph-side controllability
//! decisions.

mod closure;
mod graph;
mod pattern;

pub use closure::{closure_step, transitive_closure, ClosureTrace};
pub use graph::{
    graph_of_pattern, graph_of_subspace, pattern_of_graph, subspace_of_graph, Edge, PatternGraph,
};
pub use pattern::{all_entries, validate_entry, Pattern};

use serde::{Deserialize, Serialize};

/// Which graph criterion decides controllability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The transitive closure is `K_{n+1}`.
    Closure,
    /// The solid subgraph is connected on `1..=n` and the whole graph is
    /// connected on `1..=n+1`.
    Connectivity,
}

pub fn is_complete(g: &PatternGraph) -> bool {
    g.is_complete()
}

pub fn is_structurally_controllable(pattern: &Pattern, method: Method) -> bool {
    let g = graph_of_pattern(pattern);
    match method {
        Method::Closure => transitive_closure(&g).closure().is_complete(),
        Method::Connectivity => g.solid_connected() && g.full_connected(),
    }
}

/// Structural accessibility of the system with drift. The drift matrix is
/// drawn from the same pattern, so the criterion is the closure test again.
pub fn is_structurally_accessible(pattern: &Pattern) -> bool {
    is_structurally_controllable(pattern, Method::Closure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::se_algebra::larc_exact;

    #[test]
    fn examples() {
        let ex31 = Pattern::new(3, [(1, 2), (2, 3), (1, 4)]).unwrap();
        let ex32 = Pattern::new(3, [(1, 4), (3, 4), (1, 2)]).unwrap();
        for m in [Method::Closure, Method::Connectivity] {
            assert!(is_structurally_controllable(&ex31, m));
            assert!(!is_structurally_controllable(&ex32, m));
        }
        assert!(is_structurally_accessible(&ex31));
        assert!(!is_structurally_accessible(&ex32));
        for n in 1..=5 {
            assert!(is_structurally_controllable(&Pattern::full(n), Method::Closure));
            assert!(!is_structurally_accessible(&Pattern::empty(n)));
        }
    }

    #[test]
    fn criteria_agree_with_exact_rank_condition() {
        for n in 1..=3 {
            for p in Pattern::all(n) {
                let by_closure = is_structurally_controllable(&p, Method::Closure);
                assert_eq!(by_closure, is_structurally_controllable(&p, Method::Connectivity), "{p}");
                assert_eq!(by_closure, larc_exact(&p.basis()), "{p}");
            }
        }
    }

    #[test]
    fn connectivity_reduces_to_solid_plus_one_broken() {
        for n in 1..=4 {
            for p in Pattern::all(n) {
                let g = graph_of_pattern(&p);
                let direct = g.solid_connected() && !g.broken().is_empty();
                assert_eq!(direct, is_structurally_controllable(&p, Method::Connectivity), "{p}");
            }
        }
    }
}
