use braidsig_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("pipelines disagree on {word}: seifert sigma={seifert_sigma} det={seifert_det}, goeritz sigma={gl_sigma} det={gl_det}")]
    PipelineDisagreement {
        word: String,
        seifert_sigma: i64,
        seifert_det: String,
        gl_sigma: i64,
        gl_det: String,
    },
    #[error("{check} violated by {word}: {detail}")]
    BoundViolation {
        word: String,
        check: &'static str,
        detail: String,
    },
    #[error("family {family} n={n}: {detail}")]
    FamilyMismatch {
        family: String,
        n: usize,
        detail: String,
    },
    #[error("{words} words exceed the budget of {budget}")]
    BudgetExceeded { words: u128, budget: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("strand count {0} outside 2..=5")]
    StrandsOutOfRange(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl VerifyError {
    /// True for errors that mean a check failed, as opposed to bad input or IO.
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            VerifyError::PipelineDisagreement { .. }
                | VerifyError::BoundViolation { .. }
                | VerifyError::FamilyMismatch { .. }
        )
    }
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;
