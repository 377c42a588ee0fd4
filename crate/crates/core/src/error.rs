use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator index {index} out of range [1, {max}] for {strands} strands")]
    IndexOutOfRange {
        index: i64,
        max: usize,
        strands: usize,
    },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("operation needs at least {min} strands, got {got}")]
    TooFewStrands { min: usize, got: usize },

    #[error("word too long: {0} letters exceeds the expansion limit")]
    WordTooLong(usize),

    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),

    #[error("conjugacy search exceeded its budget of {0} nodes")]
    BudgetExceeded(usize),

    #[error("braid is not periodic")]
    NotPeriodic,

    #[error("invalid cover parameters n = {n}, k = {k} (need n >= 2, k >= 2)")]
    InvalidCover { n: usize, k: usize },

    #[error("twist letter t[{i},{l}] out of range for n = {n}, k = {k}")]
    TwistOutOfRange {
        i: usize,
        l: usize,
        n: usize,
        k: usize,
    },

    #[error("invalid block widths {p}, {q}")]
    InvalidWidths { p: usize, q: usize },

    #[error("inconsistent regular form: {0}")]
    InconsistentRegularForm(String),

    #[error("certificate does not verify: {0}")]
    CertificateMismatch(String),

    #[error(
        "tubular band {band} exchanges tubes of unequal widths {p} and {q}; \
         its cable is not a product of bands"
    )]
    UnequalBandWidths { band: usize, p: usize, q: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("no unimodular base change found for n = {n}, k = {k}")]
    NoBaseChange { n: usize, k: usize },

    #[error("integer overflow in exact matrix arithmetic")]
    Overflow,

    #[error("malformed input: {0}")]
    Malformed(String),
}
