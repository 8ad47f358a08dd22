use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parameter too small: {0}")]
    ParamTooSmall(String),
    #[error("column index {index} out of range (have {count} columns)")]
    ColumnOutOfRange { index: usize, count: usize },
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("coloring uses color {color} but the sequence has only {len} entries")]
    ColorOutOfRange { color: u32, len: usize },
    #[error("decision problems with more than {max} colors are not supported (asked for {got})")]
    TooManyColors { max: usize, got: usize },
    #[error("lift condition d + floor((b-1)/n) <= 2^ell violated")]
    LiftConditionViolated,
    #[error("base coloring is not a valid packing coloring of T^ell: {0} violation(s)")]
    InvalidBase(usize),
    #[error("walk is not a closed directed walk of an accepted length: {0}")]
    InvalidWalk(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
