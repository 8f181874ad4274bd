use thiserror::Error;

use crate::format::FormatError;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl LabError {
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Usage(_) => 1,
            LabError::Input(_) | LabError::Io(_) => 2,
        }
    }
}

impl From<FormatError> for LabError {
    fn from(e: FormatError) -> Self {
        LabError::Input(e.to_string())
    }
}

impl From<ferrers_core::exact::ExactError> for LabError {
    fn from(e: ferrers_core::exact::ExactError) -> Self {
        LabError::Input(e.to_string())
    }
}

impl From<ferrers_core::GraphError> for LabError {
    fn from(e: ferrers_core::GraphError) -> Self {
        LabError::Input(e.to_string())
    }
}
