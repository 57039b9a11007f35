//! Crate-wide error type.

use core::fmt;

/// Errors produced by the exact-arithmetic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the operation's arguments was violated.
    Domain(&'static str),
    /// 64-bit integer or coefficient arithmetic would overflow.
    Overflow,
    /// A gap-set complement is not closed under addition: `a + b` hits a gap.
    NotClosed { a: u64, b: u64 },
    /// The operation is defined only for cyclotomic numerical semigroups.
    NotCyclotomic,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Overflow => write!(f, "arithmetic overflow in exact integer computation"),
            Error::NotClosed { a, b } => {
                write!(f, "complement is not additively closed: {a} + {b} lands on a gap")
            }
            Error::NotCyclotomic => {
                write!(f, "operation is defined here only for cyclotomic numerical semigroups")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
