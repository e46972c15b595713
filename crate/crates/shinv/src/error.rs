//! Error types shared across the crate.

use std::fmt;

/// Arithmetic contract violations surfaced to callers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A quotient or shifted inverse of a zero divisor was requested.
    DivisionByZero,
    /// The leading coefficient of a divisor is not invertible, so no exact
    /// quotient exists in the domain.
    NonInvertibleLeadingCoefficient,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NonInvertibleLeadingCoefficient => {
                write!(f, "leading coefficient of divisor is not invertible")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Errors from parsing text input (integer strings, polynomial lists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    InvalidDigit(char),
    /// A digit literal is valid but does not fit the requested base/field.
    OutOfRange(String),
    BaseOutOfRange(u64),
    ModulusNotPrime(u64),
    BadFormat(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty input"),
            ParseError::InvalidDigit(c) => write!(f, "invalid digit {c:?}"),
            ParseError::OutOfRange(s) => write!(f, "value out of range: {s}"),
            ParseError::BaseOutOfRange(b) => {
                write!(f, "base {b} not supported (need 2 <= B <= 2^32)")
            }
            ParseError::ModulusNotPrime(p) => write!(f, "field modulus {p} is not prime"),
            ParseError::BadFormat(s) => write!(f, "malformed input: {s}"),
        }
    }
}

impl std::error::Error for ParseError {}
