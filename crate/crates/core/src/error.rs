use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("{operation} requires a connected graph")]
    Disconnected { operation: &'static str },

    #[error("edge polytope of an edgeless graph is undefined")]
    EdgelessGraph,

    #[error("vertex set {0:?} is not stable (or is empty)")]
    NotStable(Vec<usize>),

    #[error("perfection check limited to n <= {bound} (got n = {n}); pass an explicit perfection assertion to skip the check")]
    PerfectionBound { n: usize, bound: usize },

    #[error("matching is not perfect: vertices {0:?} are uncovered")]
    NotPerfectMatching(Vec<usize>),

    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation requires a full-dimensional polytope (dim {dim} in ambient {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("polytope is zero-dimensional")]
    DegenerateDimension,

    #[error("point is not in the required (relative) interior")]
    NotInterior,

    #[error("origin is not an interior point of the polytope")]
    OriginNotInterior,

    #[error("no coordinate subset realizes the affine lattice as Z^d; general lattice bases are unsupported")]
    NoLatticeModel,

    #[error("halfspace system is infeasible on the affine hull")]
    InfeasibleConstraint,

    #[error("simplex vertices are affinely dependent")]
    DegenerateSimplex,

    #[error("representation mismatch: {0}")]
    RepresentationMismatch(String),

    #[error("work budget exceeded during {what} (budget {budget})")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("hypotheses not satisfied: {0}")]
    Hypotheses(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
