use alloc::string::String;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("weight is singular for the positive system: {0}")]
    Degenerate(String),
    #[error("lattice is not contained in the numerator lattice")]
    NotContained,
    #[error("quotient has infinite order")]
    InfiniteQuotient,
    #[error("roots are not pairwise orthogonal")]
    NotOrthogonal,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("group of order {0} exceeds the oracle bound")]
    TooLarge(u64),
    #[error("character table extraction failed: {0}")]
    Oracle(String),
    #[error("truncated induction is not unique: {0}")]
    NotUnique(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("subset violates the R_D conditions")]
    NotInRd,
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;
