use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("no image given for variable `{0}`")]
    MissingImage(String),

    #[error("variable `{0}` is not allowed here")]
    ExtraneousVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("derivation does not respect relation `{relation}`: image reduces to `{residue}`")]
    RelationNotRespected { relation: String, residue: String },

    #[error("nilpotency not reached within {0} iterations")]
    Unbounded(usize),

    #[error("the zero element has no filtration degree")]
    ZeroElement,

    #[error("transported derivation is not regular on the chart: {0}")]
    NotRegularOnChart(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
