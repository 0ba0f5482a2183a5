use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape {parts:?}: {reason}")]
    InvalidShape { parts: Vec<u32>, reason: &'static str },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("shape {shape} has {rows} rows but SU({n}) admits at most {n}")]
    TooManyRows { shape: String, rows: usize, n: u32 },

    #[error("box count {boxes} is not a multiple of |sigma| = {sigma}")]
    IndivisibleBoxCount { boxes: u32, sigma: u32 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("weight {weight:?} does not sum to {expected}")]
    WeightMismatch { weight: Vec<u32>, expected: u32 },

    #[error("column of height {height} does not fit in SU({n})")]
    ColumnTooTall { height: u32, n: u32 },

    #[error("momentum sum {raw2}/2 is not a multiple of n = {n}")]
    Divisibility { raw2: i64, n: u32 },

    #[error("sifting produced a negative count for shape {shape} at m = {m}")]
    NegativeSift { shape: String, m: usize },

    #[error("product basis needs {required} states, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("{method} tally disagrees with reference for {context}")]
    Mismatch { method: String, context: String },

    #[error("count {0} does not fit in 64 bits")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
