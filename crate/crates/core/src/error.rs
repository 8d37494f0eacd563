use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate sample: {0}")]
    DegenerateSample(&'static str),
    #[error("unknown question family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` produced no valid draw after {attempts} attempts (check the bounds)")]
    RetriesExhausted { family: &'static str, attempts: u32 },
    #[error("cannot emit question `{title}`: {reason}")]
    Emit { title: String, reason: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

/// Positional error from the strict FMB text parser. Lines are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: expected {expected}, found {found:?}")]
pub struct ParseError {
    pub line: usize,
    pub expected: String,
    pub found: String,
}
