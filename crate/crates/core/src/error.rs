use thiserror::Error;

/// Errors produced by the evaluation kernels and the verification catalog.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument is outside the admissible range of the function or representation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("gamma function pole at z = {re} + {im}i")]
    GammaPole { re: f64, im: f64 },

    /// The analytic continuation of 2F1 is singular because c - a - b is an integer
    /// and the direct series did not converge either.
    #[error("hypergeometric parameter pole: {0}")]
    ParameterPole(String),

    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("quadrature tail bound {tail:e} exceeds tolerance {tol:e}; the integral does not converge on the cutoff")]
    QuadratureDivergence { tail: f64, tol: f64 },

    #[error("finite-difference step {0:e} is not usable at this point")]
    StepUnderflow(f64),

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("invalid options: {0}")]
    InvalidOptions(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
