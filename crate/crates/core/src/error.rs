use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),

    /// A parameter makes the requested object undefined, e.g. a series whose
    /// lower parameter hits a pole before the series terminates.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exact identity that must hold failed; this indicates a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("unsupported operator: {0}")]
    UnsupportedOperator(String),

    #[error("argument {0} lies on the branch cut [1, inf)")]
    BranchCut(String),

    #[error("pole of the gamma function near {0}")]
    Pole(String),

    #[error("degenerate connection: c - a - b = {0} is within tolerance of an integer")]
    DegenerateConnection(String),

    #[error("no evaluation path converges for z = {0}")]
    Unsupported(String),

    /// Iteration cap reached; `best` holds the last iterate as decimal strings.
    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
        best: Vec<String>,
    },
}
