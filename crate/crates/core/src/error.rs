use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual operations; report-style checks return certificates instead
/// of errors, so an `Error` always means the input (not the mathematics)
/// was at fault.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate facet {0}")]
    DuplicateFacet(String),
    #[error("facet {0} is contained in facet {1}")]
    NonMaximalFacet(String, String),
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("duplicate vertex in simplex: {0}")]
    DuplicateVertex(String),
    #[error("vertex sets clash on {0}")]
    VertexClash(String),
    #[error("{0} is not a facet")]
    NotAFacet(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("labelling is missing vertex {0}")]
    MissingVertex(String),
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("search space of {0} labellings exceeds the bound {1}")]
    SearchSpaceTooLarge(u128, u128),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("no eligible facet to refine")]
    NoEligibleFacet,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("graph is {actual}-chromatic, caller claimed {expected}")]
    ChiMismatch { expected: usize, actual: usize },
    #[error("bad boundary: {0}")]
    BadBoundary(String),
    #[error("dual max-flow value is {0}, expected 3")]
    FlowLessThan3(usize),
    #[error("region decomposition failed: {0}")]
    RegionDecompositionFailed(String),
    #[error("constructed labelling failed validation: {0}")]
    ValidationFailed(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("unsupported boundary: {0}")]
    UnsupportedBoundary(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
