use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Cartan type string {0:?}")]
    MalformedType(String),

    #[error("unsupported rank {rank} for type {family}")]
    UnsupportedRank { family: char, rank: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("elements belong to different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("not an inversion set: {0}")]
    NotInversionSet(String),

    #[error("enumeration cap exceeded: {what} needs more than {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("not comparable in Bruhat order: {0}")]
    NotComparable(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }
}
