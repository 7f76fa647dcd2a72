//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes do not compose for the requested operation.
    #[error("dimension mismatch in {context}: {left:?} vs {right:?}")]
    Dimension {
        context: String,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    /// Convolution/pooling geometry produces no valid output.
    #[error("invalid geometry: {0}")]
    Geometry(String),

    /// Class label outside `[0, class_count)`.
    #[error("label {label} out of range for {classes} classes")]
    Label { label: usize, classes: usize },

    /// Cached activations do not belong to the network they are used with.
    #[error("inconsistent state: {0}")]
    State(String),

    /// Bad configuration value or unknown name.
    #[error("config error: {0}")]
    Config(String),

    /// Malformed dataset or log file, with the byte/line position.
    #[error("format error in {path} at {at}: {message}")]
    Format {
        path: String,
        at: String,
        message: String,
    },

    /// Checkpoint does not match the expected layout or architecture.
    #[error("incompatible checkpoint: {0}")]
    Incompatible(String),

    /// Checkpoint bytes fail validation (truncation, checksum).
    #[error("corrupted checkpoint: {0}")]
    Corrupt(String),

    /// Training loss became non-finite.
    #[error("training diverged at epoch {epoch}, batch {batch} (loss {loss})")]
    Divergence {
        epoch: usize,
        batch: usize,
        loss: f64,
    },

    /// Pruning schedule refers to an impossible phase (e.g. a fully pruned layer).
    #[error("schedule error: {0}")]
    Schedule(String),

    /// Every mask entry of the network is zero.
    #[error("degenerate network: {0}")]
    Degenerate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 config, 3 data format, 4 divergence, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Format { .. } | Error::Incompatible(_) | Error::Corrupt(_) => 3,
            Error::Divergence { .. } => 4,
            _ => 1,
        }
    }

    pub(crate) fn dimension(context: impl Into<String>, left: &[usize], right: &[usize]) -> Self {
        Error::Dimension {
            context: context.into(),
            left: left.to_vec(),
            right: right.to_vec(),
        }
    }

    pub(crate) fn format(path: impl Into<String>, at: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            at: at.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
