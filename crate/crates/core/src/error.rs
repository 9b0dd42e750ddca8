use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 1..=5")]
    UnsupportedDegree(u32),
    #[error("order {0} is not a supported power of two (2, 4, 8, 16, 32)")]
    UnsupportedOrder(u32),
    #[error("code dimension {dimension} exceeds the enumeration limit {limit}")]
    DimensionTooLarge { dimension: usize, limit: usize },
    #[error("vector is not a codeword")]
    NotACodeword,
    #[error("the zero vector is not allowed here")]
    ZeroVector,
    #[error("vector has a negative entry at position {0}")]
    NegativeEntry(usize),
    #[error("vector length {found} does not match code length {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vector is not in the fundamental cone")]
    NotInCone,
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("group generators are not flag-transitive on the plane")]
    NotFlagTransitive,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
