use thiserror::Error;

use crate::group::GroupSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i64),

    #[error("operands belong to different groups: {0} and {1}")]
    MixedSpec(GroupSpec, GroupSpec),

    #[error("{what} needs {size} but the configured limit is {limit}")]
    SizeLimit { what: &'static str, size: u64, limit: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{name} = {value} is out of range [0, {bound})")]
    OutOfRange { name: &'static str, value: i64, bound: i64 },

    #[error("unsupported degree {degree}: {reason}")]
    UnsupportedDegree { degree: usize, reason: &'static str },

    #[error("{0} is not a cyclic group (n must be 1)")]
    NotCyclic(GroupSpec),

    #[error("cochain is not normalized: value {value} at {at}")]
    NotNormalized { at: String, value: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
