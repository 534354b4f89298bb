//! Crate-wide error type.

/// Errors produced by the workbench.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input stream could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A precondition on an operation's arguments was violated.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The instance exceeds a hard budget of an exact/brute-force routine.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A color subset induces a component in which no color occurs exactly once.
    #[error("centered-property violation in color subset {colors:?}: component {component:?} has no color occurring exactly once")]
    CenteredViolation {
        colors: Vec<u32>,
        component: Vec<usize>,
    },

    /// The coloring pipeline exhausted its retry budget without verifying.
    #[error("coloring failed verification after {rounds_tried} augmentation rounds (p = {p})")]
    ColoringFailed {
        p: u32,
        rounds_tried: u32,
        /// Smallest violating color subset found in the last attempt.
        violation: Option<Box<Error>>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
