//! Quadrature engines and the identity-check harness: every defining
//! identity of the kernel families and operators becomes a CheckResult,
//! aggregated into deterministic, canonically ordered reports.

mod orthogonality;
mod quadrature;
mod suites;

pub use orthogonality::{
    kernel_point, odd_zeta_extraction, odd_zeta_extraction_against, orthogonality_check,
    KernelFamily, PairKind,
};
pub use quadrature::{integrate, QuadMethod, QuadratureSpec};
pub use suites::{
    calibration, correspondence_checks, correspondence_suite, fractional_checks, fractional_suite,
    full_report, kernels_checks, ladder_checks, ladder_suite, operators_checks,
    orthogonality_grid_checks, run_suite, specfun_checks, Suite,
};
