use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested structure would exceed the configured element cap.
    #[error("resource limit exceeded: {requested} elements requested, cap is {cap}")]
    ResourceLimit { requested: String, cap: usize },

    /// The parameters fall outside the range where the formula is established.
    #[error("domain error: {0}")]
    Domain(String),

    /// An arithmetic identity that must hold did not. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("operands disagree: alphabet {left_alphabet} / truncation {left_truncation} vs alphabet {right_alphabet} / truncation {right_truncation}")]
    Mismatch {
        left_alphabet: usize,
        left_truncation: u32,
        right_alphabet: usize,
        right_truncation: u32,
    },

    #[error("not a group element: constant term must be 1")]
    NotGroupElement,

    #[error("commutator of weight {weight} cannot be evaluated at truncation {truncation}")]
    WeightExceedsTruncation { weight: u32, truncation: u32 },

    #[error("generator index {index} outside alphabet of size {alphabet}")]
    GeneratorOutOfRange { index: u32, alphabet: usize },

    #[error("the identity element has no leading term")]
    IdentityElement,

    #[error("truncation {truncation} too small, at least {required} is needed")]
    TruncationTooSmall { truncation: u32, required: u32 },
}
