use std::io;

use thiserror::Error;
use wythoff_core::Error as CoreError;

/// Failures of a command. Verification mismatches are not errors; they are
/// part of the report returned by [`crate::verify::cmd_verify`].
#[derive(Debug, Error)]
pub enum CliError {
    #[error("overflow {context}: {source}")]
    Overflow {
        context: String,
        #[source]
        source: CoreError,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    /// Wraps a library error raised while doing `context`. Overflow keeps its
    /// own exit status; anything else was caused by the arguments.
    pub fn core(context: impl Into<String>, source: CoreError) -> Self {
        let context = context.into();
        match source {
            CoreError::Overflow(_) | CoreError::CellOverflow { .. } => {
                CliError::Overflow { context, source }
            }
            other => CliError::Usage(format!("{context}: {other}")),
        }
    }

    pub fn io(context: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    pub fn write(source: io::Error) -> Self {
        CliError::io("writing output", source)
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Overflow { .. } => crate::EXIT_OVERFLOW,
            CliError::Usage(_) | CliError::Io { .. } => crate::EXIT_USAGE,
        }
    }

    /// True for a closed downstream pipe, which the binary treats as a
    /// normal end of output.
    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::Io { source, .. } if source.kind() == io::ErrorKind::BrokenPipe)
    }
}
