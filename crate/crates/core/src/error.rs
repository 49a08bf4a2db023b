use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0}")]
    Domain(String),
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("sign condition fails at row {row}; the lower bound is not justified")]
    SignConditionViolated { row: usize },
    #[error("{op} is not available for the {family} family")]
    UnsupportedFamily {
        op: &'static str,
        family: &'static str,
    },
    #[error("power iteration did not converge in {iterations} iterations")]
    ConvergenceFailure { iterations: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
