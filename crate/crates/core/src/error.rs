use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index i={i} is outside 1..={m} (modulus m={m})")]
    InvalidIndex { m: usize, i: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("pair is outside the bijection's codomain: {0}")]
    NotInCodomain(String),

    #[error("n={n} exceeds the enumeration limit {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("table covers indices up to {available}, but {requested} was requested")]
    TableTooSmall { requested: usize, available: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A quantity that must vanish identically did not (e.g. the imaginary
    /// part of a real constant evaluated in complex arithmetic).
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("malformed table cache at line {line}: {message}")]
    Cache { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
