use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: f = {f} exceeds first-row length e + t = {row1}")]
    InvalidShape { f: usize, row1: usize },

    #[error("content has {got} cells but the shape has {expected}")]
    CellCountMismatch { expected: usize, got: usize },

    #[error("cell sets do not partition {{1..{n}}}")]
    NotAPartition { n: usize },

    #[error("tableau violates the ordering condition")]
    InvalidTableau,

    #[error("path is not admissible")]
    InadmissiblePath,

    #[error("path of length 0 has no tableau")]
    EmptyPath,

    #[error("n must be positive")]
    NonPositiveN,

    #[error("parameter sum mismatch: {0}")]
    ParameterSum(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-exact division at z^{index}{}", context.as_ref().map(|c| format!(" in {c}")).unwrap_or_default())]
    NonExactDivision { index: usize, context: Option<String> },

    #[error("requested coefficient z^{n} beyond truncation order {order}")]
    BeyondOrder { n: usize, order: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Attach the name of the sub-expression being built to a division failure.
    pub fn in_term(self, name: &str) -> Self {
        match self {
            Error::NonExactDivision { index, context: None } => Error::NonExactDivision {
                index,
                context: Some(name.to_string()),
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
