use thiserror::Error;

/// Error taxonomy shared by every numerical operation in the crate.
///
/// Variants map one-to-one onto the failure modes of the evaluators:
/// poles and domain walls reject the input, overflow/convergence/conditioning
/// report that the requested accuracy is not reachable, and calibration /
/// truncation failures come from the harness-level operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("ill-conditioned: {0}")]
    Conditioning(String),
    #[error("truncation defect too large: {0}")]
    Truncation(String),
    #[error("non-finite sample at x = {0}")]
    NonFiniteSample(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
