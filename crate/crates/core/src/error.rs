use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus handed to [`FieldCtx::new`](crate::FieldCtx::new) is composite or < 2.
    NotPrime(u64),
    /// `p = 2` without the explicit override.
    CharTwoDisallowed,
    /// A modulus that does not fit the 31-bit arithmetic.
    PrimeTooLarge(u64),
    OutOfRange(String),
    DimensionMismatch { expected: usize, found: usize },
    /// A search or linear-algebra problem exceeds its size guard.
    TooLarge(String),
    BadParams(String),
    NotArtinian,
    Disconnected,
    CoverInvalid(String),
    WitnessInvalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::CharTwoDisallowed => {
                f.write_str("characteristic 2 is disallowed without the explicit override")
            }
            Error::PrimeTooLarge(p) => write!(f, "prime {p} exceeds 2^31"),
            Error::OutOfRange(what) => write!(f, "out of range: {what}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::TooLarge(what) => write!(f, "problem exceeds size guard: {what}"),
            Error::BadParams(what) => write!(f, "bad parameters: {what}"),
            Error::NotArtinian => f.write_str("the quotient ring is not Artinian"),
            Error::Disconnected => f.write_str("graph is disconnected"),
            Error::CoverInvalid(what) => write!(f, "invalid edge cover: {what}"),
            Error::WitnessInvalid(what) => write!(f, "invalid witness: {what}"),
        }
    }
}

impl core::error::Error for Error {}
