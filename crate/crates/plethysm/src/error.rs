use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse partition from {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("sizes differ: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        right: String,
        left_size: u32,
        right_size: u32,
    },

    #[error("shapes differ: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("row {row} of {partition} is not {action}")]
    BadNode {
        partition: String,
        row: usize,
        action: &'static str,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("degree {degree} exceeds the configured budget {budget}")]
    Budget { degree: u32, budget: u32 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code contract used by the CLI: 2 usage, 3 budget, 4 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget { .. } => 3,
            Error::Internal(_) => 4,
            _ => 2,
        }
    }
}
