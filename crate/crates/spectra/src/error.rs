use group_engine::GroupError;
use models::ModelError;
use scheme::SchemeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("partition is not equitable: {0}")]
    NotEquitable(String),
    #[error("budget exceeded: {what} over the cap {cap}")]
    Budget { what: String, cap: u64 },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

impl From<GroupError> for SpectraError {
    fn from(e: GroupError) -> Self {
        SpectraError::Scheme(e.into())
    }
}

impl From<ModelError> for SpectraError {
    fn from(e: ModelError) -> Self {
        SpectraError::Scheme(e.into())
    }
}
