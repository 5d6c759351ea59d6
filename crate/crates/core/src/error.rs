use thiserror::Error;

use crate::manifold::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family} requires {constraint} (got n = {n}, k = {k})")]
    InvalidManifold {
        family: Family,
        n: u32,
        k: u32,
        constraint: &'static str,
    },

    #[error("polynomial has constant term 0 and is not invertible")]
    NonUnit,

    #[error("truncation mismatch: x^{left} = 0 against x^{right} = 0")]
    TruncationMismatch { left: usize, right: usize },

    #[error("{operation} is not available for {family}: {reason}")]
    UnsupportedFamily {
        family: Family,
        operation: &'static str,
        reason: &'static str,
    },

    #[error("{family} has no polynomial generator")]
    NoPolynomialPart { family: Family },

    #[error("{0} overflows 128-bit arithmetic")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
