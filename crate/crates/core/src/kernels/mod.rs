//! The function families: Bernoulli and Hermite polynomials, periodic
//! Bernoulli kernels and their Clausen-type duals, the master generating
//! function with its calibrated sign/prefactor configuration, and the
//! Bernoulli-Hermite correspondence constant.

mod clausen;
mod hermite;
mod master;
pub(crate) mod poly;

pub use clausen::{clausen_dual, NormalizationConvention, DUAL_TO_ANALYTIC};
pub use hermite::{correspondence_constant, hermite_from_genfun, hermite_poly, hermite_roots};
pub use master::{
    analytic_a, analytic_b, calibrate_master, default_anchors, hasse_check, master_f,
    master_f_prec, Anchor, AnchorFamily, MasterFunctionConfig,
};
pub use poly::{bernoulli_poly, periodic_bernoulli, Truncated};
