//! Analytic Bernoulli/Clausen function families, the periodic Hilbert
//! transform, truncated oscillator operators, and a verification harness
//! that turns each of their defining identities into a checked record.

pub mod error;
pub mod kernels;
pub mod operators;
pub mod report;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
