//! Crate-wide error type.

use crate::rat::Rat;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Two elements from incompatible spaces were combined.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// A constructor was handed data violating its representation invariants.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// A partition/approximation level outside the valid range.
    #[error("invalid level: {0}")]
    InvalidLevel(String),

    /// A limit evaluation ran out of steps without the Cauchy gap closing.
    /// Carries the observed value trajectory; a failed certificate is loud,
    /// never a silent best-effort value.
    #[error("convergence failure after {steps} steps")]
    ConvergenceFailure { steps: u32, trajectory: Vec<Rat> },

    /// A witness tree violated its own domination contract at an evaluation
    /// site.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    /// The bound handed to a certificate constructor does not dominate.
    #[error("invalid bound: {0}")]
    InvalidBound(String),

    /// The two iterated-integral orders disagreed. Signals an arithmetic bug;
    /// exact rational evaluation of both orders must coincide.
    #[error("iterated integral orders disagree: {0}")]
    OrderDiscrepancy(String),
}
