use alloc::string::String;
use core::fmt;

/// Errors surfaced by diagram construction, parsing and the invariant pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A structural invariant of a diagram or presentation is violated.
    InvalidDiagram(String),
    /// A strand or chord reference is out of range.
    IndexOutOfRange(String),
    /// Text input could not be parsed.
    Parse(String),
    /// A move specification does not apply at the given site.
    MoveNotApplicable(String),
    /// The operation requires a different strand count.
    WrongStrandCount { expected: usize, got: usize },
    /// `|Delta(1)| != 1`: the input is not a welded long knot (or an internal bug).
    NotNormalizable(String),
    /// An otherwise unsatisfiable request (bad arity, unsupported degree, ...).
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDiagram(m) => write!(f, "invalid diagram: {m}"),
            Error::IndexOutOfRange(m) => write!(f, "index out of range: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::MoveNotApplicable(m) => write!(f, "move not applicable: {m}"),
            Error::WrongStrandCount { expected, got } => {
                write!(f, "expected {expected} strands, got {got}")
            }
            Error::NotNormalizable(m) => write!(f, "not normalizable: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
