use group_engine::GroupError;
use models::ModelError;
use scheme::SchemeError;
use spectra::SpectraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GmError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("preset file: {0}")]
    Preset(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

impl From<SchemeError> for GmError {
    fn from(e: SchemeError) -> Self {
        GmError::Spectra(e.into())
    }
}

impl From<GroupError> for GmError {
    fn from(e: GroupError) -> Self {
        GmError::Spectra(e.into())
    }
}

impl From<ModelError> for GmError {
    fn from(e: ModelError) -> Self {
        GmError::Spectra(e.into())
    }
}
