use thiserror::Error;

/// Errors raised by the closed forms and the numerical oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at non-positive integer {0}")]
    Pole(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("regime={regime}: {reason}")]
    Regime { regime: String, reason: String },

    #[error("no bound state: {0}")]
    NoBoundState(String),

    #[error("complex energy: tau={0} > 0 gives no real level")]
    ComplexEnergy(String),

    #[error("wave function has no positive node (-B/A = {0} <= 0)")]
    NoNode(String),

    #[error("no S-matrix pole: {0}")]
    NoPole(String),

    #[error("S-matrix denominator vanishes on the real momentum axis")]
    PoleOnAxis,

    #[error("integration failed: {0}")]
    Stiffness(String),

    #[error("matching function has no sign change in bracket [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },

    #[error("asymptotic fit failed: relative residual {0} exceeds tolerance")]
    Fit(String),

    #[error("degenerate overlap: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
