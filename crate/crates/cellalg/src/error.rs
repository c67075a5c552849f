//! Error type shared across the crate.

use std::fmt;

/// Errors surfaced by parsing, construction and the Gröbner kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial expression syntax error, with byte position in the input.
    PolyParse { pos: usize, msg: String },
    /// Spec-file syntax error, with 1-based line number.
    SpecParse { line: usize, msg: String },
    /// A variable name not declared in the ambient ring.
    UnknownVariable { pos: usize, name: String },
    /// Division by an element that is zero in the coefficient field.
    DivisionByZero { pos: usize },
    /// The stated characteristic is neither 0 nor prime.
    NonPrimeCharacteristic(u64),
    /// Two operands live in different ambient rings.
    AmbientMismatch,
    /// An operation required univariate input.
    MultivariateInput,
    /// An operation required a nonzero polynomial.
    ZeroPolynomial,
    /// An operation required a zero-dimensional quotient ring.
    NotZeroDimensional,
    /// The Gröbner computation exceeded its resource budget.
    BudgetExceeded { pairs: u64 },
    /// A shape constraint on matrix input was violated.
    ShapeMismatch { expected: usize, got: usize },
    /// Two layer elements belong to different layers.
    LayerMismatch,
    /// Two switch elements have different underlying algebras or pivots.
    PivotMismatch,
    /// A structure-constant table failed associativity or unit checks.
    NotAssociative { triple: (usize, usize, usize) },
    /// The oracle only computes radicals over the rationals.
    UnsupportedField,
    /// A realization was requested for a spec it cannot represent.
    RealizationUnsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PolyParse { pos, msg } => {
                write!(f, "polynomial syntax error at position {pos}: {msg}")
            }
            Error::SpecParse { line, msg } => write!(f, "spec file error at line {line}: {msg}"),
            Error::UnknownVariable { pos, name } => {
                write!(f, "unknown variable `{name}` at position {pos}")
            }
            Error::DivisionByZero { pos } => {
                write!(f, "division by zero element at position {pos}")
            }
            Error::NonPrimeCharacteristic(p) => {
                write!(f, "characteristic {p} is not 0 or a prime")
            }
            Error::AmbientMismatch => write!(f, "operands live in different ambient rings"),
            Error::MultivariateInput => write!(f, "operation requires univariate input"),
            Error::ZeroPolynomial => write!(f, "operation requires a nonzero polynomial"),
            Error::NotZeroDimensional => {
                write!(f, "operation requires a zero-dimensional quotient ring")
            }
            Error::BudgetExceeded { pairs } => {
                write!(f, "Gröbner budget exceeded after {pairs} S-pair reductions")
            }
            Error::ShapeMismatch { expected, got } => {
                write!(f, "shape mismatch: expected {expected}, got {got}")
            }
            Error::LayerMismatch => write!(f, "elements belong to different layers"),
            Error::PivotMismatch => {
                write!(f, "switch elements have different algebras or pivots")
            }
            Error::NotAssociative { triple: (i, j, k) } => {
                write!(f, "multiplication table not associative at triple ({i}, {j}, {k})")
            }
            Error::UnsupportedField => {
                write!(f, "radical oracle supports only the rational field")
            }
            Error::RealizationUnsupported(why) => write!(f, "cannot build realization: {why}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
