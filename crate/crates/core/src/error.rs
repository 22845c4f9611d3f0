use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the CLI exit codes: input errors are invariant
/// violations (3), capacity errors (4), internal errors signal a
/// disagreement between two independent computations (5).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("Weyl group of order {required} exceeds the enumeration budget of {budget} elements")]
    Capacity { required: u128, budget: u64 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
