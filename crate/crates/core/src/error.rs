use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("endpoint {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex subset must be proper and nonempty (got {size} of {n} vertices)")]
    DegenerateSubset { size: usize, n: usize },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    Complete,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is acyclic")]
    Acyclic,
    #[error("requires at least {required} vertices (got {n})")]
    TooFewVertices { required: usize, n: usize },
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("Euler characteristic {chi} outside the domain (must be <= {max})")]
    EulerCharacteristic { chi: i64, max: i64 },
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("not applicable: {0}")]
    Inapplicable(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
