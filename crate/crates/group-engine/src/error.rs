use sym_core::SymError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("budget exceeded: {what} exceeds the cap of {cap}")]
    Budget { what: String, cap: u64 },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error(transparent)]
    Sym(#[from] SymError),
}
