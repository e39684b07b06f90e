use thiserror::Error;

/// Crate-wide error type. Budget exhaustion in the L1 solver is deliberately
/// *not* an error: it is a distinct solver outcome (`l1::SolveOutcome::Unresolved`).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("n must be a positive integer")]
    InvalidN,

    #[error("graph is not connected")]
    Disconnected,

    #[error("unknown crossing id {0}")]
    UnknownCrossing(usize),

    #[error("cycles are not vertex-disjoint")]
    NotDisjoint,

    #[error("edges are not vertex-disjoint")]
    EdgesNotDisjoint,

    #[error("expected a diagram with {expected} components, got {got}")]
    WrongComponentCount { expected: usize, got: usize },

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("diagram does not lie over the given graph")]
    GraphMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
