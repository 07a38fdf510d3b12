use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix does not have full row rank")]
    RankDeficient,

    #[error("vector is not primitive (gcd of entries is {gcd})")]
    NotPrimitive { gcd: BigInt },

    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },

    #[error("matrix is singular")]
    Singular,

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("invalid defining polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("non-integral coordinates: {0}")]
    NotIntegral(String),

    #[error("element is not a positive unit of the module's coefficient ring")]
    NotAUnit,

    #[error("unit does not have the required square-root structure: {0}")]
    NotTypeB(String),

    #[error("invalid Lucas parameters: {0}")]
    InvalidLucas(String),

    #[error("not enough terms: need {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },

    #[error("ring basis must have 1 as its first vector")]
    RingBasisLacksOne,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
