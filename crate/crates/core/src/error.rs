use thiserror::Error;

/// Errors raised by graph construction and analysis.
///
/// `Internal` marks a violated invariant that the underlying theory
/// guarantees, so it always signals a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertices {0} and {1} lie in different components")]
    DifferentComponents(usize, usize),
    #[error("cartesian product factor is empty")]
    EmptyFactor,
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("graph is not a partial cube")]
    NotPartialCube,
    #[error("graph is not a daisy cube")]
    NotDaisyCube,
    #[error("graph is not a forest")]
    NotForest,
    #[error("theta class {0} does not exist")]
    NoSuchClass(usize),
    #[error("edge {edge} is not in theta class {class}")]
    EdgeNotInClass { edge: String, class: usize },
    #[error("subgraph is not isometric")]
    NotIsometric,
    #[error("bit string width mismatch: expected {expected}, got {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("outer face is ambiguous; pass an explicit outer face")]
    AmbiguousOuterFace,
    #[error("class correspondence is not an isomorphism of tau-graphs")]
    NotTauIsomorphism,
    #[error("not realizable as a resonance graph: tau-graph has a cycle")]
    NotRealizable,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
