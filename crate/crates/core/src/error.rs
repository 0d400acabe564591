//! Error type shared by all modules.

/// Errors produced by ensemble validation, numerical routines and the
/// simulator.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad ensemble spec, parameter out of
    /// its documented domain, invalid configuration).
    #[error("validation error: {0}")]
    Validation(String),

    /// An integer realization of the ensemble cannot equalize variable-side
    /// and check-side edge totals.
    #[error("infeasible realization: {0}")]
    Infeasible(String),

    /// A quantity with a removable 1/x or 1/e factor was requested where the
    /// denominator vanishes.
    #[error("numerical singularity: {0}")]
    Singularity(String),

    /// The ODE integration blew up (entries exceeded the stability bound).
    #[error("integration instability: {0}")]
    Instability(String),

    /// An optimizer hit the boundary of its search interval, so the reported
    /// optimum is not an interior critical point.
    #[error("degenerate optimum: {0}")]
    Degenerate(String),
}

impl Error {
    /// Process exit code for the CLI: 2 for validation-class errors,
    /// 3 for numerical-singularity-class errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Infeasible(_) | Error::Degenerate(_) => 2,
            Error::Singularity(_) | Error::Instability(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
