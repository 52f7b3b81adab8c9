use core::fmt;

/// Errors raised by the exact layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational was built with a zero denominator.
    DivisionByZero,
    /// A series coefficient was requested at an index where it is not defined.
    InvalidSeriesIndex(i64),
    /// A value does not fit into the range of an `f64`.
    Overflow,
    /// Text did not match the number grammar.
    Parse { position: usize, message: &'static str },
    /// A value that must live in Q[pi, 1/pi] still carries a half-integer power of pi.
    NonIntegralExponent,
    /// Division by a number that is not a single monomial `c * pi^e`.
    NotMonomial,
    /// An index lies outside the domain of the requested quantity.
    OutOfRange { what: &'static str, n: i64, k: i64 },
    /// Fewer sample points than the dimension allows.
    DegenerateSampleSize { n: u32, d: u32 },
    /// A partial f-vector lacks a required entry.
    MissingEntry(usize),
    /// A partial f-vector violates the Dehn-Sommerville relations.
    Inconsistent(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::InvalidSeriesIndex(m) => write!(f, "invalid series index {m}"),
            Error::Overflow => f.write_str("overflow"),
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::NonIntegralExponent => f.write_str("half-integer power of pi did not cancel"),
            Error::NotMonomial => f.write_str("divisor is not a monomial in pi"),
            Error::OutOfRange { what, n, k } => write!(f, "{what}: index ({n}, {k}) out of range"),
            Error::DegenerateSampleSize { n, d } => {
                write!(f, "degenerate sample size: n = {n} must exceed d = {d}")
            }
            Error::MissingEntry(l) => write!(f, "missing f-vector entry f_{l}"),
            Error::Inconsistent(l) => {
                write!(f, "f-vector violates the Dehn-Sommerville relation at f_{l}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
