use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    /// An operator image left the requested target span during matrix assembly.
    #[error("image of basis element {basis} leaves the target span (offending term {term})")]
    ClosureViolation { basis: String, term: String },

    #[error("parse error at line {line}, column {column}: {message}{}", expected_suffix(.expected))]
    Parse { line: usize, column: usize, message: String, expected: Vec<String> },

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
