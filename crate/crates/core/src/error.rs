use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("modulus 0 at position {position}")]
    ZeroModulus { position: usize },

    #[error("multiplicity 0 at position {position}")]
    ZeroMultiplicity { position: usize },

    #[error("number at position {position} does not fit in 64 bits")]
    NumberTooLarge { position: usize },

    #[error("expected {expected} coordinates, found {found}")]
    CoordinateCount { expected: usize, found: usize },

    #[error("coordinate {index} is not an integer: {token:?}")]
    BadCoordinate { index: usize, token: String },

    #[error("element does not conform to the group schema")]
    ShapeMismatch,

    #[error("position {position} is out of range (valid: {valid})")]
    PositionOutOfRange { position: usize, valid: String },

    #[error("basic reduction about position {position}: entry is zero")]
    ZeroPivot { position: usize },

    #[error("group has free rank {free_rank}; it has infinitely many automorphism classes")]
    InfiniteClasses { free_rank: usize },

    #[error("group is infinite (free rank {free_rank})")]
    InfiniteGroup { free_rank: usize },

    #[error("{what} is {count}, exceeding the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        count: String,
        cap: u64,
    },

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("trace replay failed at step {step}: {message}")]
    Replay { step: usize, message: String },
}

impl Error {
    /// Parse and usage problems, as opposed to domain errors.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::ZeroModulus { .. }
                | Error::ZeroMultiplicity { .. }
                | Error::NumberTooLarge { .. }
                | Error::CoordinateCount { .. }
                | Error::BadCoordinate { .. }
                | Error::ShapeMismatch
                | Error::PositionOutOfRange { .. }
        )
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "Syntax",
            Error::ZeroModulus { .. } => "ZeroModulus",
            Error::ZeroMultiplicity { .. } => "ZeroMultiplicity",
            Error::NumberTooLarge { .. } => "NumberTooLarge",
            Error::CoordinateCount { .. } => "CoordinateCount",
            Error::BadCoordinate { .. } => "BadCoordinate",
            Error::ShapeMismatch => "ShapeMismatch",
            Error::PositionOutOfRange { .. } => "PositionOutOfRange",
            Error::ZeroPivot { .. } => "ZeroPivot",
            Error::InfiniteClasses { .. } => "InfiniteClasses",
            Error::InfiniteGroup { .. } => "InfiniteGroup",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::MalformedMatrix(_) => "MalformedMatrix",
            Error::Replay { .. } => "Replay",
        }
    }
}
