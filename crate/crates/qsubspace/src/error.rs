//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("basis index out of range: {index} for dimension {dim}")]
    BasisIndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("product space too large: {dim} exceeds cap {cap}")]
    ProductTooLarge { dim: usize, cap: usize },

    #[error("quantizer dimension too large: {dim} exceeds cap {cap}")]
    QuantizerTooLarge { dim: u128, cap: usize },

    #[error("invalid quantizer range: q_max {q_max} < q_min {q_min}")]
    InvalidQuantizerRange { q_min: i64, q_max: i64 },

    #[error("zero superposition cannot be normalized")]
    ZeroSuperposition,

    #[error("{0}")]
    EmptyInput(&'static str),

    #[error("non-finite value: {0}")]
    NonFinite(f64),

    #[error("value out of quantizable range: {0}")]
    OutOfRange(f64),

    #[error("row {row} has {got} features, expected {expected}")]
    RaggedRow { row: usize, expected: usize, got: usize },

    #[error("need at least two classes, found {0}")]
    NotEnoughClasses(usize),

    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("invalid bipartite cut: {0}")]
    InvalidCut(String),

    #[error("csv line {line}: {msg}")]
    Csv { line: u64, msg: String },

    #[error("k out of range: {k} not in 1..={total}")]
    KOutOfRange { k: usize, total: usize },

    #[error("model has no stored learning elements; refit with store_elements enabled")]
    NoStoredElements,

    #[error("unsupported model format {0}")]
    UnsupportedFormat(u32),

    #[error("invalid model file: {0}")]
    InvalidModel(String),

    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
