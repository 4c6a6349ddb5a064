use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed input data (ragged points, non-finite coordinates, bad weights count).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degree mismatch: plan has degree {expected}, input has degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A precomputed scaling or rescaling factor is not finite.
    #[error("overflow: {0}")]
    Overflow(String),

    #[error("sequence of length {len} does not fit transform of length {capacity}")]
    Length { len: usize, capacity: usize },

    #[error("spectrum was produced by an incompatible transform plan")]
    PlanMismatch,

    #[error("requested transform length {requested} exceeds the maximum {max}")]
    Resource { requested: usize, max: usize },

    /// All retained convolution coefficients have been consumed by extensions.
    #[error("gamma tail exhausted after {0} extensions; build a new plan")]
    ExhaustedTail(usize),

    /// A computed rational weight is non-positive or non-finite.
    #[error("degenerate weight {value} at index {index}")]
    DegenerateWeight { index: usize, value: f64 },
}
