use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u8, right: u8 },

    #[error("unsupported twist modulus {0} (expected 2 or 3)")]
    UnsupportedModulus(u8),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("twist {value} at index {index} is out of range for modulus {modulus}")]
    TwistOutOfRange { index: usize, value: u8, modulus: u8 },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// The operation is only defined on elements whose edge flips all vanish.
    #[error("element is not mechanically admissible (nonzero edge flips)")]
    NotInTPrime,

    #[error("unknown move {0:?}")]
    UnknownMove(String),

    #[error("invalid invariant class {0:?}")]
    InvalidClass(String),

    #[error("sample count must be at least 1")]
    EmptySample,

    #[error("model too large: {size} elements exceeds cap {cap}")]
    ModelTooLarge { size: u128, cap: u64 },

    #[error("empty generator set")]
    NoGenerators,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A state-file parse failure, located by 1-based line and token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub token: Option<usize>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.token {
            Some(t) => write!(f, "line {}, token {}: {}", self.line, t, self.message),
            None => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
