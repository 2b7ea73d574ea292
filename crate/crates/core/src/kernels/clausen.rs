use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::kernels::poly::{classical_kernel_sign, kernel_coefficient, trig_tail_bound, Truncated};
use crate::specfun::{CirclePoint, MAX_BERNOULLI};

/// The two self-consistent scalings of the Clausen-type dual family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizationConvention {
    /// Scaled so the order-1 member is -log(2 sin pi x).
    Analytic,
    /// Same Fourier coefficient magnitudes as the periodic Bernoulli kernel
    /// of the same order, sine and cosine swapped.
    Dual,
}

/// Order-independent conversion: Analytic = DUAL_TO_ANALYTIC * Dual.
pub const DUAL_TO_ANALYTIC: f64 = -PI;

/// Clausen-type dual of the periodic Bernoulli kernel, by plain truncated
/// summation: the signed coefficient of `periodic_bernoulli` with the trig
/// function swapped (Dual), or that series rescaled by -pi (Analytic).
pub fn clausen_dual(
    m: usize,
    x: CirclePoint,
    k_trunc: usize,
    conv: NormalizationConvention,
) -> Result<Truncated> {
    if m == 0 || m > MAX_BERNOULLI {
        return Err(Error::Range(format!("kernel order must be in 1..={MAX_BERNOULLI}, got {m}")));
    }
    if k_trunc == 0 {
        return Err(Error::Range("truncation must be >= 1".into()));
    }
    let xv = x.get();
    if m == 1 && x.endpoint_distance() < 1e-9 {
        return Err(Error::Domain(format!(
            "order-1 dual kernel has a logarithmic singularity at the endpoints (x = {xv})"
        )));
    }
    let scale = match conv {
        NormalizationConvention::Dual => 1.0,
        NormalizationConvention::Analytic => DUAL_TO_ANALYTIC,
    };
    let coeff = scale * classical_kernel_sign(m) * kernel_coefficient(m);
    let swapped_to_cos = m % 2 == 1; // sine <-> cosine swap of the Bernoulli form
    let mut sum = 0.0f64;
    for k in 1..=k_trunc {
        let angle = TAU * xv * k as f64;
        let trig = if swapped_to_cos { angle.cos() } else { angle.sin() };
        sum += trig / (k as f64).powi(m as i32);
    }
    Ok(Truncated {
        value: coeff * sum,
        tail_bound: coeff.abs() * trig_tail_bound(m, xv, k_trunc),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cp(x: f64) -> CirclePoint {
        CirclePoint::new(x).unwrap()
    }

    #[test]
    fn analytic_order_one_is_log_sine() {
        // -log(2 sin(pi/6)) = -log 1 = 0
        let t = clausen_dual(1, cp(1.0 / 6.0), 1_000_000, NormalizationConvention::Analytic).unwrap();
        assert!(t.value.abs() < 2e-6, "value {}", t.value);

        // -log(2 sin(pi/2)) = -log 2
        let t = clausen_dual(1, cp(0.5), 1_000_000, NormalizationConvention::Analytic).unwrap();
        assert!((t.value - (-std::f64::consts::LN_2)).abs() < 2e-6);
    }

    #[test]
    fn dual_order_two_is_catalan_type_sum() {
        // oracle: (1/pi^2) sum sin(pi k/2)/k^2 = G/pi^2, G by direct alternating sum
        let mut catalan = 0.0;
        let mut sign = 1.0;
        for j in 0..5_000_000u64 {
            let d = (2 * j + 1) as f64;
            catalan += sign / (d * d);
            sign = -sign;
        }
        let t = clausen_dual(2, cp(0.25), 200_000, NormalizationConvention::Dual).unwrap();
        let expect = catalan / (PI * PI);
        assert_relative_eq!(t.value, expect, max_relative = 1e-5);
        assert_relative_eq!(expect, 0.0928067, max_relative = 1e-5);
    }

    #[test]
    fn singularity_guard() {
        assert!(matches!(
            clausen_dual(1, cp(1e-10), 100, NormalizationConvention::Analytic),
            Err(Error::Domain(_))
        ));
        // higher orders are continuous at the endpoints
        assert!(clausen_dual(2, cp(1e-10), 100, NormalizationConvention::Dual).is_ok());
    }

    #[test]
    fn parity_reflection() {
        // A_m(1-x) = (-1)^{m+1} A_m(x)
        for m in 1..=5usize {
            let a = clausen_dual(m, cp(0.19), 30_000, NormalizationConvention::Dual).unwrap().value;
            let b = clausen_dual(m, cp(0.81), 30_000, NormalizationConvention::Dual).unwrap().value;
            let sign = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
            assert_relative_eq!(b, sign * a, max_relative = 1e-8, epsilon = 1e-8);
        }
    }

    #[test]
    fn conventions_differ_by_constant() {
        for m in 1..=4usize {
            let d = clausen_dual(m, cp(0.3), 10_000, NormalizationConvention::Dual).unwrap().value;
            let a = clausen_dual(m, cp(0.3), 10_000, NormalizationConvention::Analytic).unwrap().value;
            assert_relative_eq!(a, DUAL_TO_ANALYTIC * d, max_relative = 1e-14);
        }
    }
}
