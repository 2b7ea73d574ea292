use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex order parameter `s` shared by the zeta/polylog family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticOrder(Complex64);

impl AnalyticOrder {
    pub fn new(value: Complex64) -> Result<Self> {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::Domain(format!("non-finite order {value}")));
        }
        Ok(Self(value))
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(Complex64::new(re, 0.0))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn conj(self) -> Self {
        Self(self.0.conj())
    }

    /// True when the order is exactly the real integer `n`.
    pub fn is_integer(self, n: i64) -> bool {
        self.0.im == 0.0 && self.0.re == n as f64
    }
}

impl From<f64> for AnalyticOrder {
    fn from(re: f64) -> Self {
        Self(Complex64::new(re, 0.0))
    }
}

impl TryFrom<Complex64> for AnalyticOrder {
    type Error = Error;
    fn try_from(value: Complex64) -> Result<Self> {
        Self::new(value)
    }
}

/// Position on the unit circle in units of full turns, strictly inside (0,1).
///
/// The endpoints are excluded because the log-type kernels are singular there.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CirclePoint(f64);

impl CirclePoint {
    pub fn new(x: f64) -> Result<Self> {
        if !(x.is_finite() && 0.0 < x && x < 1.0) {
            return Err(Error::Domain(format!(
                "circle point must lie strictly in (0,1), got {x}"
            )));
        }
        Ok(Self(x))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Reflection x -> 1-x, the conjugate point on the circle.
    pub fn mirrored(self) -> Self {
        Self(1.0 - self.0)
    }

    /// Distance to the nearest singular endpoint.
    pub fn endpoint_distance(self) -> f64 {
        self.0.min(1.0 - self.0)
    }
}

/// Evaluation budget for every series loop in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    /// Target relative tolerance; evaluators stop once the tail estimate drops below it.
    pub rel_tol: f64,
    /// Hard bound on the number of series terms; exceeding it is a convergence error.
    pub max_terms: usize,
    /// Number of Euler-Maclaurin correction terms (even, >= 2).
    pub euler_maclaurin_order: usize,
}

impl Precision {
    pub fn new(rel_tol: f64, max_terms: usize, euler_maclaurin_order: usize) -> Result<Self> {
        if !(rel_tol.is_finite() && rel_tol >= 1e-15) {
            return Err(Error::Range(format!("rel_tol must be >= 1e-15, got {rel_tol}")));
        }
        if max_terms == 0 {
            return Err(Error::Range("max_terms must be positive".into()));
        }
        if euler_maclaurin_order == 0 || euler_maclaurin_order % 2 != 0 {
            return Err(Error::Range(format!(
                "euler_maclaurin_order must be a positive even integer, got {euler_maclaurin_order}"
            )));
        }
        Ok(Self { rel_tol, max_terms, euler_maclaurin_order })
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self { rel_tol: 1e-12, max_terms: 10_000_000, euler_maclaurin_order: 12 }
    }
}
