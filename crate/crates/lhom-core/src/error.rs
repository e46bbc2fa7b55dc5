use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("search cap exhausted: {0}")]
    CapExhausted(String),
    #[error("gadget not found: {0}")]
    GadgetNotFound(String),
    #[error("structural claim violated: {0}")]
    ClaimViolated(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::CapExhausted(_))
    }
}
