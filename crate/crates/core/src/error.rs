use thiserror::Error;

use crate::LineId;

/// Every failure mode of the library. The leading token of each message is a
/// stable machine-readable code (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parallel-lines: {0} are parallel")]
    ParallelLines(String),
    #[error("concurrent-triple: lines {0}, {1} and {2} pass through one point")]
    ConcurrentTriple(LineId, LineId, LineId),
    #[error("horizontal-line: {0} is horizontal")]
    HorizontalLine(String),
    #[error("degenerate-line: both direction coefficients are zero")]
    DegenerateLine,
    #[error("too-few-lines: an arrangement needs at least {min} lines, got {got}")]
    TooFewLines { min: usize, got: usize },
    #[error("unknown-line: no line with id {0}")]
    UnknownLine(LineId),
    #[error("degenerate-extension: {0}")]
    DegenerateExtension(String),
    #[error("bad-token: {0:?}")]
    BadToken(String),
    #[error("not-a-permutation: {0}")]
    NotAPermutation(String),
    #[error("bad-leading-signs: the first three entries must read +1 -1 +1 or -1 +1 -1 in label order")]
    BadLeadingSigns,
    #[error("not-an-infinity-permutation: line {line} at position {position} is not at infinity")]
    NotAnInfinityPermutation { position: usize, line: LineId },
    #[error("not-infinity-type: no infinity permutation exists")]
    NotInfinityType,
    #[error("must-start-at-1: a gonality cycle is written from line 1")]
    MustStartAtOne,
    #[error("invalid-cycle: {0}")]
    InvalidCycle(String),
    #[error("n-too-small: need n >= {min}, got {got}")]
    NTooSmall { min: usize, got: usize },
    #[error("n-out-of-range: n = {got} outside {min}..={max}")]
    NOutOfRange { min: usize, max: usize, got: usize },
    #[error("bad-positions: {0}")]
    BadPositions(String),
    #[error("bad-position: {0}")]
    BadPosition(String),
    #[error("realization-failed: {0}")]
    RealizationFailed(String),
    #[error("bad-file: line {line}: {msg}")]
    BadFile { line: usize, msg: String },
    #[error("id-order-mismatch: ids must follow angle order; suggested relabeling {suggestion}")]
    IdOrderMismatch { suggestion: String },
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier, e.g. `"parallel-lines"`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ParallelLines(_) => "parallel-lines",
            Error::ConcurrentTriple(..) => "concurrent-triple",
            Error::HorizontalLine(_) => "horizontal-line",
            Error::DegenerateLine => "degenerate-line",
            Error::TooFewLines { .. } => "too-few-lines",
            Error::UnknownLine(_) => "unknown-line",
            Error::DegenerateExtension(_) => "degenerate-extension",
            Error::BadToken(_) => "bad-token",
            Error::NotAPermutation(_) => "not-a-permutation",
            Error::BadLeadingSigns => "bad-leading-signs",
            Error::NotAnInfinityPermutation { .. } => "not-an-infinity-permutation",
            Error::NotInfinityType => "not-infinity-type",
            Error::MustStartAtOne => "must-start-at-1",
            Error::InvalidCycle(_) => "invalid-cycle",
            Error::NTooSmall { .. } => "n-too-small",
            Error::NOutOfRange { .. } => "n-out-of-range",
            Error::BadPositions(_) => "bad-positions",
            Error::BadPosition(_) => "bad-position",
            Error::RealizationFailed(_) => "realization-failed",
            Error::BadFile { .. } => "bad-file",
            Error::IdOrderMismatch { .. } => "id-order-mismatch",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
