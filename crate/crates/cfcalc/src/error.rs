use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex `{vertex}` in simplex input")]
    DuplicateVertexInSimplex { vertex: String },

    #[error("simplex {simplex} is not a member of the complex")]
    SimplexNotInComplex { simplex: String },

    #[error("operands live on different ambient complexes")]
    AmbientMismatch,

    #[error("integer overflow while {context}")]
    IntegerOverflow { context: &'static str },

    #[error("function is not Euler: {function} has odd link value {value} at {simplex}")]
    NotEuler {
        function: String,
        simplex: String,
        value: i64,
    },

    #[error("set is not closed: {simplex} is missing a face")]
    SetNotClosed { simplex: String },

    #[error("set cannot be closed by adjoining vertices only: missing face {simplex}")]
    SetNotClosable { simplex: String },

    #[error("internal consistency failure: {what}")]
    FormulaDisagreement { what: String },

    #[error("complex has dimension {dim}, operation supports at most {max}")]
    DimensionTooHigh { dim: usize, max: usize },

    #[error("skeleton of dimension {level} is not Euler: odd link value {value} at {simplex}")]
    SkeletonNotEuler {
        level: usize,
        simplex: String,
        value: i64,
    },

    #[error("value {value} at {simplex} is not divisible by {divisor} in {context}")]
    HalfNotIntegral {
        context: String,
        simplex: String,
        value: i64,
        divisor: i64,
    },

    #[error("unknown fixture `{name}`")]
    UnknownFixture { name: String },

    #[error("parse error: {reason}")]
    ParseError { reason: String },

    #[error("validation error: {reason}")]
    ValidationError { reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code used by the command line surface: input problems
    /// exit with 2, internal consistency failures with 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::FormulaDisagreement { .. } => 3,
            _ => 2,
        }
    }
}
