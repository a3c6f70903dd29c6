use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({}, {}) is a loop", .0.0, .0.1)]
    LoopEdge((usize, usize)),

    #[error("edge ({}, {}) appears more than once", .0.0, .0.1)]
    DuplicateEdge((usize, usize)),

    #[error("edge ({}, {}) references a vertex outside 0..{n}", .edge.0, .edge.1)]
    VertexOutOfRange { edge: (usize, usize), n: usize },

    #[error("rotation system is not a plane embedding: {0}")]
    NotPlaneEmbedding(String),

    #[error("rotation at vertex {vertex} does not match the graph: {detail}")]
    InconsistentRotation { vertex: usize, detail: String },

    #[error("graph has {n} vertices but the test needs more than {k}")]
    TooSmall { n: usize, k: usize },

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("layout for block {0} fails verification")]
    InvalidBlockLayout(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("graph is not planar")]
    NotPlanar,

    #[error(
        "graph is not nicely planar: triangle ({}, {}, {}) is separating; \
         a homeomorphic two-page embedding is still possible via edge subdivision",
        .0.0, .0.1, .0.2
    )]
    NotNicelyPlanar((usize, usize, usize)),

    #[error("internal guarantee violated: {0}")]
    InternalGuaranteeViolated(String),

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("cycle vertices do not match the trace: {0}")]
    TraceMismatch(String),

    #[error("order does not admit a two-page layout")]
    NotSubhamiltonianOrder,

    #[error("layout does not cover the graph: {0}")]
    CoverageError(String),

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },

    #[error("layout is invalid: {0} same-page crossing(s)")]
    InvalidLayout(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
