use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("content undefined for zero")]
    ZeroContent,

    #[error("operation undefined for the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("singular Moebius transformation (ad - bc = 0)")]
    SingularMoebius,

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Caller supplied an argument outside the operation's domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Input does not satisfy the hypothesis of a classification theorem.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// A proved identity failed to hold. Either the mathematics is wrong
    /// or there is a bug; either way the result must not be trusted.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("root finder did not converge after {iterations} iterations (worst residual {worst_residual:e})")]
    NoConvergence {
        iterations: usize,
        worst_residual: f64,
        best: Vec<Complex64>,
    },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

impl Error {
    /// True for errors caused by bad arguments rather than by a failed
    /// mathematical check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Precondition(_)
                | Error::NotPrime(_)
                | Error::ParseRational(_)
                | Error::SingularMoebius
        )
    }
}
