use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{factorial, riemann_zeta, AnalyticOrder};

const MAX_HERMITE: usize = 200;

/// Hermite polynomial (physicists' convention) by the three-term recurrence
/// H_{m+1} = 2x H_m - 2m H_{m-1}.
pub fn hermite_poly(m: usize, x: f64) -> Result<f64> {
    if m > MAX_HERMITE {
        return Err(Error::Overflow(format!("hermite_poly is guarded at m <= {MAX_HERMITE}")));
    }
    let mut prev = 1.0f64;
    if m == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * x;
    for k in 1..m {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    if !cur.is_finite() {
        return Err(Error::Overflow(format!("H_{m}({x}) exceeds f64 range")));
    }
    Ok(cur)
}

/// H_m(x) recovered from the generating function e^{-t^2 + 2xt}: the m-th
/// Taylor coefficient times m!, extracted by discrete circular sampling on
/// |t| = t_radius.
pub fn hermite_from_genfun(m: usize, x: f64, t_radius: f64) -> Result<f64> {
    if m > 30 {
        return Err(Error::Range("coefficient extraction is conditioned for m <= 30".into()));
    }
    if !(t_radius.is_finite() && t_radius > 0.0) {
        return Err(Error::Domain(format!("t_radius must be positive, got {t_radius}")));
    }
    let n = 256usize;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut max_sample = 0.0f64;
    for j in 0..n {
        let theta = 2.0 * PI * j as f64 / n as f64;
        let t = Complex64::from_polar(t_radius, theta);
        let sample = (-t * t + 2.0 * x * t).exp();
        max_sample = max_sample.max(sample.norm());
        acc += sample * Complex64::from_polar(1.0, -(m as f64) * theta);
    }
    let coeff = acc / (n as f64 * t_radius.powi(m as i32));
    let value = coeff.re * factorial(m);
    // rounding amplification of the sampled coefficient
    let err_bound = f64::EPSILON * max_sample * factorial(m) / t_radius.powi(m as i32);
    if err_bound > (1e-8 * value.abs()).max(1e-10) {
        return Err(Error::Conditioning(format!(
            "sampling error bound {err_bound:.3e} at radius {t_radius} exceeds tolerance for H_{m}"
        )));
    }
    Ok(value)
}

/// Roots of H_m, found by bisection inside the interlacing brackets built
/// from the roots of H_{m-1}.
pub fn hermite_roots(m: usize) -> Result<Vec<f64>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    if m > 64 {
        return Err(Error::Range("root tables supported for m <= 64".into()));
    }
    let mut roots = vec![0.0f64];
    for order in 2..=m {
        let outer = (2.0 * order as f64 + 1.0).sqrt() + 1.0;
        let mut brackets = Vec::with_capacity(order + 1);
        brackets.push(-outer);
        brackets.extend(roots.iter().copied());
        brackets.push(outer);
        let mut next = Vec::with_capacity(order);
        for w in brackets.windows(2) {
            next.push(bisect_hermite(order, w[0], w[1])?);
        }
        roots = next;
    }
    Ok(roots)
}

fn bisect_hermite(order: usize, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = hermite_poly(order, lo)?;
    let fhi = hermite_poly(order, hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    debug_assert!(flo.signum() != fhi.signum(), "interlacing bracket must straddle a root");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fmid = hermite_poly(order, mid)?;
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The correspondence constant
/// c_n = (-1)^n 2^{2n+1} (2n+1)! zeta(2n+1) / pi^{2n+1}, n >= 1.
pub fn correspondence_constant(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("c_0 involves the divergent zeta(1)".into()));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let order = 2 * n + 1;
    let zeta = riemann_zeta(AnalyticOrder::real(order as f64)?)?.re;
    Ok(sign * 2f64.powi(order as i32) * factorial(order) * zeta / PI.powi(order as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn recurrence_values() {
        // oracle: Rodrigues differentiation at small m gives
        // H_0 = 1, H_1 = 2x, H_2 = 4x^2 - 2, H_3 = 8x^3 - 12x, H_4 = 16x^4 - 48x^2 + 12
        assert_relative_eq!(hermite_poly(0, 3.1).unwrap(), 1.0);
        assert_relative_eq!(hermite_poly(2, 1.0).unwrap(), 2.0);
        assert_relative_eq!(hermite_poly(3, 0.5).unwrap(), -5.0);
        assert_relative_eq!(hermite_poly(4, 0.3).unwrap(), 16.0 * 0.3f64.powi(4) - 48.0 * 0.09 + 12.0);
    }

    #[test]
    fn overflow_guard() {
        assert!(matches!(hermite_poly(201, 1.0), Err(Error::Overflow(_))));
        assert!(matches!(hermite_poly(180, 500.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn genfun_matches_recurrence() {
        assert_relative_eq!(hermite_from_genfun(1, 0.7, 2.0).unwrap(), 1.4, max_relative = 1e-10);
        assert_relative_eq!(hermite_from_genfun(2, 1.0, 2.0).unwrap(), 2.0, max_relative = 1e-10);
        let expect = hermite_poly(4, 0.3).unwrap();
        assert_relative_eq!(hermite_from_genfun(4, 0.3, 2.0).unwrap(), expect, max_relative = 1e-10);
        assert_relative_eq!(expect, 7.8096, max_relative = 1e-12);
        for m in 0..=20usize {
            for &x in &[-1.3, 0.2, 2.4] {
                let g = hermite_from_genfun(m, x, (m as f64).sqrt().max(1.0)).unwrap();
                let h = hermite_poly(m, x).unwrap();
                assert!((g - h).abs() <= 1e-8 * h.abs().max(1.0), "m={m}, x={x}: {g} vs {h}");
            }
        }
    }

    #[test]
    fn genfun_conditioning_error() {
        assert!(matches!(hermite_from_genfun(20, 0.5, 1e-3), Err(Error::Conditioning(_))));
        assert!(matches!(hermite_from_genfun(31, 0.5, 2.0), Err(Error::Range(_))));
    }

    #[test]
    fn roots_of_low_orders() {
        // H_2 = 4x^2 - 2 has roots +-1/sqrt(2); H_3 has {0, +-sqrt(3/2)}
        let r2 = hermite_roots(2).unwrap();
        assert_relative_eq!(r2[1], 0.5f64.sqrt(), max_relative = 1e-13);
        let r3 = hermite_roots(3).unwrap();
        assert!(r3[1].abs() < 1e-14);
        assert_relative_eq!(r3[2], 1.5f64.sqrt(), max_relative = 1e-13);
        // all claimed roots actually vanish
        for m in 1..=20usize {
            for r in hermite_roots(m).unwrap() {
                let v = hermite_poly(m, r).unwrap();
                let scale = hermite_poly(m, r + 0.05).unwrap().abs().max(1.0);
                assert!(v.abs() / scale < 1e-10, "H_{m}({r}) = {v}");
            }
        }
    }

    #[test]
    fn correspondence_constant_values() {
        // oracle: the formula with independently computed zeta values
        let z3 = riemann_zeta(AnalyticOrder::real(3.0).unwrap()).unwrap().re;
        let c1 = correspondence_constant(1).unwrap();
        assert_relative_eq!(c1, -48.0 * z3 / PI.powi(3), max_relative = 1e-13);
        assert!(c1 < 0.0 && (-c1 - 1.861) < 0.01, "c1 = {c1}");
        let z5 = riemann_zeta(AnalyticOrder::real(5.0).unwrap()).unwrap().re;
        let c2 = correspondence_constant(2).unwrap();
        assert_relative_eq!(c2, 32.0 * 120.0 * z5 / PI.powi(5), max_relative = 1e-13);
        assert!(matches!(correspondence_constant(0), Err(Error::Domain(_))));
    }
}
