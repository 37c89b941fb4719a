use thiserror::Error;

/// Library-wide error type. Numerical verdicts (an identity failing its
/// tolerance) are never errors; errors mean a computation could not be
/// carried out as requested.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition between arguments is violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An iteration or series failed to reach the requested tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Request exceeds a configured table or order limit.
    #[error("capability exceeded: {0}")]
    Capability(String),

    /// Evaluation exactly at a pole of the function.
    #[error("pole: {0}")]
    Pole(String),

    /// Identity registry lookup miss.
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),

    /// Bad precision/tolerance configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
}
