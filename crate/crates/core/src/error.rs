use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("affine quiver needs e >= 3, got e = {0}")]
    UnsupportedE(i64),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("level mismatch: shape has {shape} components, multicharge has {charge} entries")]
    LevelMismatch { shape: usize, charge: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("node {0} is not in the diagram")]
    NodeOutside(String),
    #[error("node {0} is not a Garnir node")]
    NotGarnir(String),
    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("tableau is not row-standard")]
    NotRowStandard,
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    CapExceeded { dim: String, cap: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
