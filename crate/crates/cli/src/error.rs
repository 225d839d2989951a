use cleftlab::Error;

/// Failures mapped onto the documented exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("schema error in {location}: {message}")]
    Schema { location: String, message: String },
    #[error("missing artifact: {0}")]
    Missing(String),
    #[error("invariant violation in {location}: {message}")]
    Invalid { location: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Inconclusive(_) => 1,
            CliError::Schema { .. } | CliError::Missing(_) => 2,
            CliError::Invalid { .. } => 3,
        }
    }

    pub fn schema(location: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn invalid(location: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Classify a library error raised while handling `location`.
    pub fn from_core(location: &str, e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::Inconclusive(_) | Error::BudgetExceeded { .. } | Error::CertificationFailed(_) => {
                CliError::Inconclusive(format!("{location}: {message}"))
            }
            Error::UnsupportedField(_)
            | Error::DimensionMismatch(_)
            | Error::FieldMismatch(..)
            | Error::InvalidQuiver(_)
            | Error::NonParallelRelation { .. }
            | Error::InadmissibleBound { .. }
            | Error::AlgebraMismatch
            | Error::Unsupported(_) => CliError::schema(location, message),
            _ => CliError::invalid(location, message),
        }
    }
}

pub trait Context<T> {
    fn at(self, location: &str) -> Result<T, CliError>;
}

impl<T> Context<T> for cleftlab::Result<T> {
    fn at(self, location: &str) -> Result<T, CliError> {
        self.map_err(|e| CliError::from_core(location, e))
    }
}
