use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// `Integrality` and `NonIntegralMultiplicity` signal a broken invariant
/// upstream rather than bad user input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: expected partitions of {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("non-integral coefficient {coefficient} at {key} in {basis}-basis expansion")]
    Integrality {
        basis: String,
        key: String,
        coefficient: String,
    },

    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("virtual input rejected: the power map is only defined on genuine representations")]
    VirtualInput,

    #[error("non-integral multiplicity {value} for {label}")]
    NonIntegralMultiplicity { label: String, value: String },

    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    #[error("degree {requested} exceeds truncation cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("odd-dimensional cell {name} (dimension {dim})")]
    OddCell { name: String, dim: usize },

    #[error("inconsistent cell partition: {0}")]
    InconsistentPartition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
