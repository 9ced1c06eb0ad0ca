use alloc::string::String;
use core::fmt;

/// Domain errors raised by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The index is not admissible (empty or last entry 1) where one is required.
    NotAdmissible(String),
    /// An index, word or composition violates a structural precondition.
    Domain(String),
    /// A rational parameter hits a pole of the summand.
    Pole(String),
    /// Two routes that must agree produced different values.
    Mismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAdmissible(s) => write!(f, "not admissible: {s}"),
            Error::Domain(s) => write!(f, "domain error: {s}"),
            Error::Pole(s) => write!(f, "pole: {s}"),
            Error::Mismatch(s) => write!(f, "internal mismatch: {s}"),
        }
    }
}

impl core::error::Error for Error {}
