//! Scalar special functions behind every kernel formula: gamma, Riemann and
//! Hurwitz zeta, the polylogarithm on the unit circle, Bernoulli numbers.
//!
//! All evaluators are pure and reentrant; precision is threaded explicitly
//! through [`Precision`] (the `_prec` variants) or defaulted.

mod bernoulli;
mod gamma;
mod polylog;
mod precision;
mod zeta;

pub use bernoulli::{bernoulli_number, MAX_BERNOULLI};
pub(crate) use bernoulli::{bernoulli_rational, rational_to_f64};
pub use gamma::{factorial, gamma, gamma_real};
pub use polylog::{polylog_circle, polylog_circle_prec, polylog_hurwitz_route, polylog_series_route};
pub use precision::{AnalyticOrder, CirclePoint, Precision};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_prec, riemann_zeta, riemann_zeta_prec};
pub(crate) use zeta::{hurwitz_em_core, real_pow};
