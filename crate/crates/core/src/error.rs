use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("wrong-solver: {0}")]
    WrongSolver(String),

    #[error("{solver} refuses n = {n} (cap is {cap})")]
    CapacityRefusal {
        solver: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid range: {0}")]
    InvalidRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
