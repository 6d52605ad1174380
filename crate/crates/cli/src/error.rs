use std::fmt;
use std::process::ExitCode;

use gm_analyzer::GmError;
use group_engine::GroupError;
use models::ModelError;
use scheme::SchemeError;
use spectra::SpectraError;

/// Failure classes with stable exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Exit 1: bad flags, excluded parameters, unreadable files.
    Input(String),
    /// Exit 2: an axiom, contract or cross-check failed.
    Failure(String),
    /// Exit 3: a budget was exceeded.
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => 1,
            CliError::Failure(_) => 2,
            CliError::Budget(_) => 3,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Failure(m) => write!(f, "failure: {m}"),
            CliError::Budget(m) => write!(f, "{m}"),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let m = e.to_string();
        match e {
            GroupError::Parameter(_) | GroupError::Sym(_) => CliError::Input(m),
            GroupError::Budget { .. } => CliError::Budget(m),
            GroupError::Contract(_) | GroupError::Consistency(_) => CliError::Failure(m),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::Group(g) => g.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        let m = e.to_string();
        match e {
            SchemeError::Group(g) => g.into(),
            SchemeError::Model(x) => x.into(),
            SchemeError::Parameter(_) | SchemeError::Document(_) => CliError::Input(m),
            SchemeError::Budget { .. } => CliError::Budget(m),
            SchemeError::Axiom { .. } | SchemeError::Consistency(_) => CliError::Failure(m),
        }
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        let m = e.to_string();
        match e {
            SpectraError::Scheme(s) => s.into(),
            SpectraError::Parameter(_) => CliError::Input(m),
            SpectraError::Budget { .. } => CliError::Budget(m),
            SpectraError::Contract(_) | SpectraError::Consistency(_) | SpectraError::NotEquitable(_) => {
                CliError::Failure(m)
            }
        }
    }
}

impl From<GmError> for CliError {
    fn from(e: GmError) -> Self {
        let m = e.to_string();
        match e {
            GmError::Spectra(s) => s.into(),
            GmError::Parameter(_) | GmError::Preset(_) => CliError::Input(m),
            GmError::Contract(_) | GmError::Consistency(_) => CliError::Failure(m),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
