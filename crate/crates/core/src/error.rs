use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An interval comparison or floor could not be decided at the working
    /// precision. Callers escalate precision on this error.
    #[error("undecided at {bits} bits: {what}")]
    Undecided { what: String, bits: u32 },

    /// Precision escalation hit its cap without deciding.
    #[error("precision insufficient after escalating to {bits} bits: {what}")]
    PrecisionInsufficient { what: String, bits: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("root isolation failed: {0}")]
    RootIsolation(String),

    /// A published constant failed to dominate the value it is meant to bound.
    #[error("published constant {name} = {published} does not dominate derived value {derived}")]
    PublishedBoundViolated {
        name: &'static str,
        published: String,
        derived: String,
    },

    #[error("no convergent with denominator above {bound} among {available} computed")]
    InsufficientConvergents { bound: String, available: usize },

    #[error("epsilon not certified positive for convergents {first}..={last}")]
    EpsilonNonPositive { first: usize, last: usize },

    #[error("closure gap: reduced bound {reduced} is not below search cutoff {cutoff}")]
    ClosureGap { reduced: u64, cutoff: u64 },
}

impl Error {
    pub(crate) fn undecided(what: impl Into<String>, bits: u32) -> Self {
        Error::Undecided {
            what: what.into(),
            bits,
        }
    }

    /// True for the errors that more precision could fix.
    pub fn is_precision(&self) -> bool {
        matches!(
            self,
            Error::Undecided { .. } | Error::PrecisionInsufficient { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
