use thiserror::Error;

/// Errors raised by the solvers, the reductions and the instance format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("invalid input: {0}")]
    Input(String),

    /// Instance text that does not parse.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The graph does not have the structure an operation needs.
    #[error("graph shape: {0}")]
    Shape(String),

    /// An interdiction strategy costs more than the budget.
    #[error("strategy cost {cost} exceeds budget {budget}")]
    Budget { cost: u64, budget: u64 },

    /// Exhaustive solver asked to enumerate something too large.
    #[error("instance too large: {0}")]
    Size(String),

    /// A specialized algorithm was asked to run outside its preconditions.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
