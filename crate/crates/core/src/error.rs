use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value is malformed or out of range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A design precondition does not hold for the given game.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An operation was attempted in a state that does not allow it.
    #[error("invalid state: {0}")]
    State(String),

    /// An experiment configuration failed validation. `field` is the dotted path.
    #[error("config field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
