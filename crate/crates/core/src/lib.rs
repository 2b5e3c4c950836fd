//! Exact-arithmetic analysis of edge polytopes and stable polytopes of finite
//! graphs: normality via the odd cycle condition, Gorenstein verdicts from
//! combinatorial criteria with independent geometric cross-checks, special
//! simplices, and Ehrhart h-vectors with symmetry and unimodality predicates.
//!
//! Everything is deterministic: searches branch on lowest indices, outputs
//! are sorted, and identical inputs produce identical certificates.

pub mod analyze;
pub mod cliques;
pub mod counting;
pub mod cycles;
pub mod edge;
pub mod ehrhart;
pub mod enumerate;
pub mod error;
pub mod facets;
mod feasibility;
pub mod graph;
pub mod io;
mod linalg;
pub mod polytope;
pub mod poset;
pub mod report;
pub mod stable;

pub use error::{Error, Result};
pub use graph::{Graph, Matching, VertexSet};
pub use poset::Poset;

/// Work limits for the geometric searches. `facet_subsets` caps the number of
/// vertex subsets ranked by the facet oracle; `count_nodes` caps node visits
/// of the lattice-point DFS.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub facet_subsets: u64,
    pub count_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            facet_subsets: 50_000_000,
            count_nodes: 100_000_000,
        }
    }
}

impl Budget {
    /// One knob for both limits, as exposed on the command line.
    pub fn uniform(limit: u64) -> Self {
        Budget {
            facet_subsets: limit,
            count_nodes: limit,
        }
    }
}
