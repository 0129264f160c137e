use thiserror::Error;

/// Malformed textual value (dyadic, radical, element).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ParseValueError {
    message: String,
}

impl ParseValueError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseValueError {
            message: message.into(),
        }
    }
}

/// Syntax error in a word over `t, a, b`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct WordError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Value(#[from] ParseValueError),
    #[error("ball of radius {radius} exceeds the element budget of {budget}")]
    BudgetExceeded { radius: usize, budget: usize },
    #[error("certificate check failed: {0}")]
    Certificate(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
