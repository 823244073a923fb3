//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the configured degree cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("partition sizes do not match: {0} vs {1}")]
    SizeMismatch(u32, u32),

    #[error("invalid partition: parts must be positive and weakly decreasing")]
    InvalidPartition,

    #[error("weight is not dominant: {0}")]
    NonDominant(String),

    #[error("unsupported Cartan type: {0}")]
    UnsupportedType(String),

    #[error("unknown case id: {0}")]
    UnknownCase(String),

    #[error("parameter out of range for {case}: {detail}")]
    ParamOutOfRange { case: String, detail: String },

    #[error("no product-support oracle available for case {0}")]
    OracleUnavailable(String),

    #[error("weight outside the case's weight monoid: {0}")]
    OutsideMonoid(String),

    #[error("case data validation failed: {0}")]
    DataValidation(String),

    #[error("basis conversion not supported: {0}")]
    UnsupportedBasis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
