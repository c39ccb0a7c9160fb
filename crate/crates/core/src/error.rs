use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("polynomials in {0} and {1} variables cannot be combined")]
    VariableCount(usize, usize),
    #[error("expected a polynomial in x letters only")]
    DirectionLetters,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("degree {got} is below the required minimum {need}")]
    DegreeTooLow { got: usize, need: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial uses h letters but no direction tuple was supplied")]
    MissingDirection,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("variable index {index} outside 1..={g}")]
    IndexOutOfRange { index: usize, g: usize },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl NcError {
    /// Internal-consistency failures indicate a bug, not bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, NcError::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, NcError>;
