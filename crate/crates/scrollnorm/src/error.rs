use thiserror::Error;

/// Errors raised by curve construction, section-space computation and the
/// verification gates.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("curve polynomial is not monic")]
    NotMonic,
    #[error("curve polynomial has even degree {0}")]
    EvenDegree(usize),
    #[error("curve polynomial has degree {0}, need at least 3")]
    DegreeTooSmall(usize),
    #[error("curve polynomial is not squarefree")]
    NotSquarefree,
    #[error("point ({0}, {1}) does not lie on the curve")]
    NotOnCurve(String, String),
    #[error("fiber over x = {0} has no rational point")]
    IrrationalPoint(String),
    #[error("valuation of the zero function is undefined")]
    ZeroFunction,
    #[error("linear system is empty (h0 = 0)")]
    EmptySystem,
    #[error("divisor is not both special and effective")]
    NotSpecialOrNotEffective,
    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("scroll normalization violated: {0}")]
    NormalizationError(String),
    #[error("base locus could not be decided over the rationals")]
    IndeterminateBaseLocus,
    #[error("internal audit failure: {0}")]
    InternalAudit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
