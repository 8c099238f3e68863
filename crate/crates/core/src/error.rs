use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("word length {0} exceeds the 128-bit limit")]
    WordTooLong(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not full rank (rank {rank}, {rows} rows)")]
    NotFullRank { rank: usize, rows: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial is not primitive: alpha has period {period}, expected {expected}")]
    NotPrimitive { period: usize, expected: usize },
    #[error("dimension {k} exceeds the exhaustive limit {max}; use the bounded distance test instead")]
    DimensionTooLarge { k: usize, max: usize },
    #[error("code does not contain its dual")]
    NotWeaklySelfDual,
    #[error("displacement row {row} fails the checks of h1")]
    DisplacementFailsCheck { row: usize },
    #[error("displacement rows do not give distinct cosets")]
    CosetsNotDistinct,
    #[error("oracle scale cap exceeded: n = {n}, K = {k} (limits n <= 16, K <= 8)")]
    ScaleCap { n: usize, k: usize },
    #[error("distance table does not cover n = {n}")]
    TableCoverage { n: usize },
    #[error("unknown code {0:?}")]
    UnknownCode(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
