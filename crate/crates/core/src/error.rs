use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("partition {partition} is not contained in the {rows}x{cols} rectangle")]
    NotInRectangle {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("minor selection is not square ({rows} rows, {cols} columns)")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    /// The trailing principal minor of size `n - index` vanished.
    #[error("Gauss decomposition fails: trailing principal minor xi_{{{index}+1..n}} vanishes")]
    GaussMinorVanishes { index: usize },

    /// `x_{1,n}` vanished (index 1) or `xi^{1..i-1,n}_{1..i}` vanished (index i).
    #[error("RU decomposition fails: minor at index {index} vanishes")]
    RuMinorVanishes { index: usize },

    #[error("condition {condition} fails{detail}")]
    YCondition {
        condition: &'static str,
        detail: String,
    },

    #[error("point is not on Z: {0}")]
    NotOnZ(String),

    #[error("polynomial is not in the span of the f-monomial basis")]
    NotInSpan,

    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("unsupported variable {0}")]
    UnsupportedVariable(String),
}
