use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An input outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Quadrature failed to reproduce a quantity it must preserve.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Observables handed to a correlator or inequality are not compatible.
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
