//! Crate-wide error type.

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised when building frameworks, parsing input or enumerating
/// extensions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two arguments were declared with the same name.
    #[error("duplicate argument label `{0}`")]
    DuplicateLabel(String),

    /// An attack referenced an argument that was never declared.
    #[error("unknown argument label `{0}`")]
    UnknownLabel(String),

    /// An attack pair used an index outside the argument range.
    #[error("attack index {index} out of range for {arg_count} arguments")]
    InvalidAttack { index: usize, arg_count: usize },

    /// Malformed input text. Line numbers are 1-based.
    #[error("line {line}: {message}: `{text}`")]
    Syntax {
        line: usize,
        message: String,
        text: String,
    },

    /// A TGF document had no `#` line between nodes and edges.
    #[error("missing `#` separator line between nodes and edges")]
    MissingSeparator,

    /// The framework is too large for the fixed-width argument bit set.
    #[error("{actual} arguments exceed the {limit}-argument cap of the bit-set representation")]
    TooManyArguments { actual: usize, limit: usize },

    /// An enumeration was refused because it would be intractable.
    #[error(
        "refusing to enumerate over {actual} arguments (limit {limit}): \
         the candidate space grows as 2^n subsets and the cogency check \
         compares up to 4^n subset pairs; raise the limit to force the run"
    )]
    SizeLimitExceeded { actual: usize, limit: usize },

    /// A generator configuration was rejected.
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
}
