use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands use different variable alphabets")]
    AlphabetMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable `{0}` is used by the function but missing from the expansion ordering")]
    MissingOrderingVariable(String),

    #[error("variable `{0}` appears twice")]
    DuplicateVariable(String),

    #[error("series are not comparable: {0}")]
    IncomparableSeries(String),

    #[error("matrix is not square")]
    NotSquare,

    #[error("matrix has odd dimension {0}")]
    OddDimension(usize),

    #[error("matrix is not antisymmetric at ({row}, {col})")]
    NotAntisymmetric { row: usize, col: usize },

    #[error("evaluation hits a pole")]
    Pole,

    #[error("the Heisenberg zero mode is not represented")]
    ZeroHeisenbergMode,

    #[error("twisted Heisenberg modes are odd, got {0}")]
    EvenTwistedMode(i64),

    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),

    #[error("invalid request: {0}")]
    Invalid(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("cannot parse `{input}`: {message}")]
    Parse { input: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
