//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A pivot fell below the relative singularity threshold.
    SingularMatrix,
    /// Operand dimensions do not agree.
    DimensionMismatch { expected: usize, got: usize },
    /// The matrix does not satisfy the B-matrix row conditions.
    NotBMatrix,
    /// The matrix is not a strictly diagonally dominant M-matrix with
    /// positive diagonal.
    NotSddM,
    /// A `1 - u_i * l_i` factor was nonpositive; cannot happen for true SDD
    /// inputs, guards rounding.
    Degenerate,
    /// Input outside the operation's domain (e.g. a nonpositive diagonal
    /// entry where positivity is required).
    NotApplicable,
    /// Scalar arguments outside the stated preconditions.
    DomainError(String),
    /// No complementary basis was accepted by the enumeration.
    NoSolution,
    /// Problem dimension exceeds the brute-force enumeration cap.
    DimensionCap { n: usize, cap: usize },
    /// Malformed input file.
    ParseError { line: usize, msg: String },
    /// Ragged or dimension-inconsistent input file.
    DimensionError { line: usize, msg: String },
    /// Underlying I/O failure.
    Io(String),
    /// The output consumer went away mid-write.
    BrokenPipe,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotBMatrix => write!(f, "matrix is not a B-matrix"),
            Error::NotSddM => {
                write!(f, "matrix is not an SDD M-matrix with positive diagonal")
            }
            Error::Degenerate => write!(f, "degenerate 1 - u_i*l_i factor"),
            Error::NotApplicable => write!(f, "operation not applicable to this input"),
            Error::DomainError(msg) => write!(f, "domain error: {msg}"),
            Error::NoSolution => write!(f, "no complementary basis accepted"),
            Error::DimensionCap { n, cap } => {
                write!(f, "dimension {n} exceeds enumeration cap {cap}")
            }
            Error::ParseError { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::DimensionError { line, msg } => {
                write!(f, "dimension error at line {line}: {msg}")
            }
            Error::Io(msg) => write!(f, "io error: {msg}"),
            Error::BrokenPipe => write!(f, "broken pipe"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Error::BrokenPipe
        } else {
            Error::Io(e.to_string())
        }
    }
}
