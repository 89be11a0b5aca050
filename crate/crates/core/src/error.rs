use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("not a plane partition: {0}")]
    InvalidPlanePartition(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid cell ({0},{1}): indices are 1-based")]
    InvalidCell(usize, usize),
    #[error("value out of range: {0}")]
    ValueOutOfRange(String),
    #[error("out of domain PP(∞,{n},{m})")]
    OutOfDomain { n: usize, m: u32 },
    #[error("invalid insertion of {value} in row {row}")]
    InvalidInsertion { value: u32, row: usize },
    #[error("empty path set")]
    EmptyPathSet,
    #[error("not a strict tableau")]
    NotStrictTableau,
    #[error("non-positive weight at ({0},{1})")]
    NonPositiveWeight(usize, usize),
    #[error("inner shape {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("composition has length {got}, expected {expected}")]
    CompositionLength { expected: usize, got: usize },
    #[error("variable tables differ")]
    VarTableMismatch,
    #[error("unknown variable family `{0}`")]
    UnknownFamily(String),
    #[error("duplicate variable family `{0}`")]
    DuplicateFamily(String),
    #[error("non-invertible truncation: {0}")]
    NonInvertible(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("matrix is not square")]
    NotSquare,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("check parameter `{0}`: {1}")]
    BadParam(String, String),
    #[error("bad grid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
