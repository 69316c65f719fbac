use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("invalid tree degree {0}: {1}")]
    InvalidDegree(u32, &'static str),
    #[error("index n = {n} is outside the table (n_max = {n_max})")]
    OutOfRange { n: usize, n_max: usize },
    #[error("table was built for {found}, not for tree degree {expected}")]
    TableMismatch { expected: u32, found: String },
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("square root needs a radicand with constant term exactly 1, got {0}")]
    UnsupportedRadicand(String),
    #[error("series is not divisible by t^{k}: coefficient of t^{index} is {value}")]
    NotDivisible {
        k: usize,
        index: usize,
        value: String,
    },
    #[error("cannot shift series of order {order} down by {k}")]
    ShiftTooLarge { order: usize, k: usize },
    #[error("degenerate weights: {0}")]
    DegenerateWeights(&'static str),
    #[error("unknown step {0:?}, expected 'U' or 'D'")]
    InvalidStep(char),
    #[error("path goes below the axis at step {0}")]
    BelowAxis(usize),
    #[error("path ends at height {0}, not on the axis")]
    NotOnAxis(usize),
    #[error("word is not reduced: cancelling pair at position {0}")]
    UnreducedWord(usize),
    #[error("generator x{index} outside x1..x{generators}")]
    UnknownGenerator { index: u32, generators: u32 },
    #[error("enumeration needs {needed} states, ceiling is {ceiling}")]
    Infeasible { needed: String, ceiling: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
