use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller supplied something outside the supported domain: a composite
    /// modulus, a non-primitive generator, the wrong residue class.
    Input(String),
    /// Argument outside the domain of a partial function, e.g. `ind(0)`.
    Domain(String),
    /// Exact integer arithmetic would have wrapped.
    Overflow,
    /// A mathematical identity that must hold did not: an upstream bug or a
    /// convention mismatch.
    Invariant(String),
    /// Branch of the theory that is not built (odd `f`, characteristic two, ...).
    Unsupported(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for errors caused by the caller's arguments rather than by the
    /// computation itself.
    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_) | Error::Domain(_) | Error::Unsupported(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(m) => write!(f, "invalid input: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Overflow => f.write_str("integer overflow in exact arithmetic"),
            Error::Invariant(m) => write!(f, "invariant violated: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported case: {m}"),
        }
    }
}

impl core::error::Error for Error {}
