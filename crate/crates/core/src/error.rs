use thiserror::Error;

/// Errors produced by parsing, validation, solving and reductions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text.
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// A structurally well-formed game that violates an arena or game invariant.
    #[error("invalid game: {0}")]
    Invalid(String),
    /// A specialist solver was called on an instance outside its class.
    #[error("wrong instance class: {0}")]
    WrongClass(String),
    #[error("too many targets: {count} exceeds mask width {limit}")]
    TooManyTargets { count: usize, limit: usize },
    #[error("product of {states} states exceeds the memory budget of {limit} states")]
    MemoryBudget { states: usize, limit: usize },
    #[error("no witness: {0}")]
    NoWitness(String),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("too many variables: {count} (limit {limit})")]
    TooManyVariables { count: usize, limit: usize },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
    #[error("strategy undefined at reachable state ({vertex}, {mask:#b})")]
    PartialStrategy { vertex: usize, mask: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}
