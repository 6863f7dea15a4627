use thiserror::Error;

use crate::lie::Generator;

/// A syntax error in expression, generator or rational text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        Self { pos, msg: msg.into() }
    }
}

#[derive(Debug, Error)]
pub enum SvError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0} is not in sv+ (needs L_n, M_n with n >= 1 or Y_(n+1/2) with n >= 0)")]
    NotPositive(Generator),
    #[error("z-element requires a singular homomorphism (psi(M_1) = 0)")]
    NonsingularPsi,
    #[error("dot action of {generator} not nilpotent within {bound} steps")]
    BoundExceeded { generator: Generator, bound: u32 },
    #[error("invalid module vector: {0}")]
    InvalidVector(String),
    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),
    #[error("solution failed re-substitution: {0}")]
    Resubstitution(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = SvError> = std::result::Result<T, E>;
