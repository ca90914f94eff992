//! Error type shared across the library.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` failed the primality check.
    NotPrime(u64),
    /// A log-radius was `-inf` or otherwise outside the allowed range.
    InvalidRadii(String),
    /// Operands live in different variable counts or different contexts.
    ContextMismatch(String),
    /// Division by zero in exact rational arithmetic.
    DivisionByZero,
    /// An operation that needs a nonzero polynomial got zero.
    ZeroPolynomial(&'static str),
    /// A generator list was empty where at least one element is required.
    EmptyInput(&'static str),
    /// A candidate basis failed the Buchberger criterion.
    NotGroebner { pair: (usize, usize) },
    /// Finite-radius elimination discarded an element whose leading term
    /// does not involve the eliminated variable: the chosen radius is too
    /// small to isolate the variable.
    RadiusTooSmall { witness: String },
    /// A variable index was out of range for the ambient algebra.
    NoSuchVariable { index: usize, nvars: usize },
    /// Something the caller supplied could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{} is not prime", p),
            Error::InvalidRadii(msg) => write!(f, "invalid log-radii: {}", msg),
            Error::ContextMismatch(msg) => write!(f, "context mismatch: {}", msg),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPolynomial(what) => write!(f, "zero polynomial not allowed: {}", what),
            Error::EmptyInput(what) => write!(f, "empty input: {}", what),
            Error::NotGroebner { pair } => {
                write!(f, "not a Gröbner basis: pair ({}, {}) fails", pair.0, pair.1)
            }
            Error::RadiusTooSmall { witness } => write!(
                f,
                "elimination radius too small: discarded element {} has a leading term free of the eliminated variable",
                witness
            ),
            Error::NoSuchVariable { index, nvars } => {
                write!(f, "variable index {} out of range (algebra has {})", index, nvars)
            }
            Error::Parse(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for Error {}
