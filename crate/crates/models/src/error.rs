use group_engine::GroupError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("parameters excluded: {0}")]
    Exclusion(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
