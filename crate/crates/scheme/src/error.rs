use group_engine::GroupError;
use models::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("axiom {axiom} fails: {witness}")]
    Axiom { axiom: &'static str, witness: String },
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("budget exceeded: {what} over the cap {cap}")]
    Budget { what: String, cap: u64 },
    #[error("scheme document: {0}")]
    Document(String),
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Model(ModelError),
}

impl From<GroupError> for SchemeError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Budget { what, cap } => SchemeError::Budget { what, cap },
            e => SchemeError::Group(e),
        }
    }
}

impl From<ModelError> for SchemeError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::Group(g) => g.into(),
            e => SchemeError::Model(e),
        }
    }
}
