use std::f64::consts::{PI, TAU};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::{analytic_a, MasterFunctionConfig};
use crate::operators::fourier::{derivative, pairing, FourierSeries};
use crate::report::{fmt17, CheckResult};
use crate::specfun::{AnalyticOrder, CirclePoint};

/// Partial-fraction sum, log-sine derivative, and configured-family
/// derivative checks against pi cot(pi x).
pub fn cotangent_checks(
    x: CirclePoint,
    terms: usize,
    cfg: &MasterFunctionConfig,
) -> Result<Vec<CheckResult>> {
    if x.endpoint_distance() < 1e-3 {
        return Err(Error::Domain(format!(
            "cotangent checks need x at least 1e-3 from the integers, got {}",
            x.get()
        )));
    }
    let xv = x.get();
    let target = PI * (PI * xv).cos() / (PI * xv).sin();
    let mut checks = Vec::with_capacity(3);

    // (a) p.v. sum 1/x + 2x sum 1/(x^2 - n^2), tail O(1/terms)
    let mut pf = 1.0 / xv;
    for n in 1..=terms {
        let nf = n as f64;
        pf += 2.0 * xv / (xv * xv - nf * nf);
    }
    let tol_a = (4.0 / terms as f64).max(1e-8);
    checks.push(
        CheckResult::asserted(
            "cotangent",
            &format!("partial-fraction x={}", fmt17(xv)),
            Complex64::new(pf, 0.0),
            Complex64::new(target, 0.0),
            tol_a,
        )
        .with_input("terms", terms.to_string())
        .with_input("x", fmt17(xv)),
    );

    // (b) d/dx log sin(pi x) = pi cot(pi x) by central difference
    let h = 1e-5;
    let fd_logsin = (((PI * (xv + h)).sin()).ln() - ((PI * (xv - h)).sin()).ln()) / (2.0 * h);
    checks.push(
        CheckResult::asserted(
            "cotangent",
            &format!("log-sine-derivative x={}", fmt17(xv)),
            Complex64::new(fd_logsin, 0.0),
            Complex64::new(target, 0.0),
            1e-6,
        )
        .with_input("h", fmt17(h))
        .with_input("x", fmt17(xv)),
    );

    // (c) d/dx A(1;x) = -pi cot(pi x) in the Analytic convention
    let s1 = AnalyticOrder::real(1.0)?;
    let up = analytic_a(s1, CirclePoint::new(xv + h)?, cfg)?;
    let dn = analytic_a(s1, CirclePoint::new(xv - h)?, cfg)?;
    let fd_a = (up - dn) / (2.0 * h);
    checks.push(
        CheckResult::asserted(
            "cotangent",
            &format!("a-family-derivative x={}", fmt17(xv)),
            Complex64::new(fd_a, 0.0),
            Complex64::new(-target, 0.0),
            1e-5,
        )
        .with_input("h", fmt17(h))
        .with_input("x", fmt17(xv))
        .with_note("Analytic convention"),
    );
    Ok(checks)
}

/// The order-1 kernel as a truncated series: x - 1/2 on (0,1).
fn sawtooth_series(k_max: usize) -> FourierSeries {
    let mut f = FourierSeries::zero(k_max);
    for k in 1..=k_max as i64 {
        let c = Complex64::new(0.0, 1.0 / (TAU * k as f64));
        f.set_coeff(k, c);
        f.set_coeff(-k, c.conj());
    }
    f
}

/// Distributional-derivative pairing: <B(1;.), -phi'> = integral(phi) - phi(0)
/// for a family of smooth periodic test functions, via coefficient-space
/// pairing. The residual is bounded by the comb tail of each phi.
pub fn weak_derivative_check(k_trunc: usize) -> Result<Vec<CheckResult>> {
    if k_trunc < 64 {
        return Err(Error::Range(format!("need K >= 64, got {k_trunc}")));
    }
    let saw = sawtooth_series(k_trunc);
    let mut checks = Vec::new();

    for (label, phi, phi_at_zero, tail) in test_functions(k_trunc) {
        let minus_dphi = derivative(&phi).scaled(Complex64::new(-1.0, 0.0));
        let lhs = pairing(&saw, &minus_dphi);
        let rhs = phi.mean() - phi_at_zero;
        checks.push(
            CheckResult::asserted(
                "weak-derivative",
                &format!("phi={label}"),
                lhs,
                rhs,
                tail.max(1e-9),
            )
            .with_input("K", k_trunc.to_string())
            .with_note(&format!("comb tail bound {}", fmt17(tail))),
        );
    }
    Ok(checks)
}

/// Five smooth periodic test functions: (label, series, phi(0), tail bound).
fn test_functions(k_max: usize) -> Vec<(&'static str, FourierSeries, Complex64, f64)> {
    let mut out = Vec::new();

    let mut one = FourierSeries::zero(k_max);
    one.set_coeff(0, Complex64::new(1.0, 0.0));
    out.push(("const", one, Complex64::new(1.0, 0.0), 0.0));

    out.push((
        "cos2pi",
        FourierSeries::cosine_mode(k_max, 1, 1.0),
        Complex64::new(1.0, 0.0),
        0.0,
    ));

    out.push((
        "sin4pi",
        FourierSeries::sine_mode(k_max, 2, 1.0),
        Complex64::new(0.0, 0.0),
        0.0,
    ));

    let mut mixed = FourierSeries::cosine_mode(k_max, 3, 0.7);
    let s = FourierSeries::sine_mode(k_max, 5, -0.2);
    for k in -(k_max as i64)..=k_max as i64 {
        mixed.set_coeff(k, mixed.coeff(k) + s.coeff(k));
    }
    out.push(("mixed", mixed, Complex64::new(0.7, 0.0), 0.0));

    // heat-kernel smoothed bump centered at 0.4
    let sigma = 0.06f64;
    let center = 0.4f64;
    let mut bump = FourierSeries::zero(k_max);
    let mut at_zero = Complex64::new(0.0, 0.0);
    for k in -(k_max as i64)..=k_max as i64 {
        let kf = k as f64;
        let mag = (-2.0 * PI * PI * sigma * sigma * kf * kf).exp();
        let c = Complex64::from_polar(mag, -TAU * kf * center);
        bump.set_coeff(k, c);
        at_zero += c;
    }
    let kf = (k_max + 1) as f64;
    let tail = 4.0 * (-2.0 * PI * PI * sigma * sigma * kf * kf).exp();
    out.push(("bump", bump, at_zero, tail));

    out
}

/// Operator norm of (H T_t H^{-1} - M_n) on the k != 0 subspace of the
/// 2K-dimensional truncated mode basis. H commutes with translations, so
/// this measures how far the diagonal translation sits from the shifting
/// modulation; the value is reported, not asserted.
pub fn conjugation_defect(t: f64, n: i64, k_trunc: usize) -> Result<f64> {
    if k_trunc == 0 || n.unsigned_abs() as usize > k_trunc / 2 {
        return Err(Error::Range(format!("need |n| <= K/2, got n={n}, K={k_trunc}")));
    }
    // basis: modes -K..-1, 1..K
    let modes: Vec<i64> = (-(k_trunc as i64)..=k_trunc as i64).filter(|&k| k != 0).collect();
    let dim = modes.len();
    let index_of = |k: i64| -> Option<usize> { modes.binary_search(&k).ok() };

    let mut mat = DMatrix::<Complex64>::zeros(dim, dim);
    for (col, &k) in modes.iter().enumerate() {
        // H T_t H^{-1}: the multipliers -i sgn(k) and +i sgn(k) cancel
        mat[(col, col)] += Complex64::from_polar(1.0, TAU * k as f64 * t);
        // minus M_n: mode k maps to k + n
        if let Some(row) = index_of(k + n) {
            mat[(row, col)] -= Complex64::new(1.0, 0.0);
        }
    }
    Ok(mat.svd(false, false).singular_values[0])
}

/// Exact multiplier-algebra facts behind the quarter-turn reading of the
/// transform: H^2 = -I, H^4 = I, and norm preservation on zero-mean series.
pub fn quarter_rotation_checks(k_trunc: usize) -> Result<Vec<CheckResult>> {
    use crate::operators::fourier::hilbert;
    if k_trunc < 8 {
        return Err(Error::Range(format!("need K >= 8, got {k_trunc}")));
    }
    let mut checks = Vec::new();

    // H^2 = -I and H^4 = I on every nonzero mode, exactly
    let mut worst_sq = 0.0f64;
    let mut worst_quad = 0.0f64;
    for k in 1..=k_trunc {
        for series in [
            FourierSeries::sine_mode(k_trunc, k, 1.0),
            FourierSeries::cosine_mode(k_trunc, k, 0.7),
        ] {
            let h2 = hilbert(&hilbert(&series));
            let h4 = hilbert(&hilbert(&h2));
            for km in -(k_trunc as i64)..=k_trunc as i64 {
                worst_sq = worst_sq.max((h2.coeff(km) + series.coeff(km)).norm());
                worst_quad = worst_quad.max((h4.coeff(km) - series.coeff(km)).norm());
            }
        }
    }
    checks.push(
        CheckResult::asserted(
            "quarter-rotation",
            "involution-squared",
            Complex64::new(worst_sq, 0.0),
            Complex64::new(0.0, 0.0),
            0.0,
        )
        .with_input("K", k_trunc.to_string())
        .with_note("H^2 = -I on the zero-mean subspace, exact in coefficient arithmetic"),
    );
    checks.push(
        CheckResult::asserted(
            "quarter-rotation",
            "fourth-power-identity",
            Complex64::new(worst_quad, 0.0),
            Complex64::new(0.0, 0.0),
            0.0,
        )
        .with_input("K", k_trunc.to_string())
        .with_note("H^4 = I on the zero-mean subspace, exact"),
    );

    // norm preservation on a fixed dense zero-mean series
    let mut f = FourierSeries::zero(k_trunc);
    let mut state = 0x9e3779b97f4a7c15u64;
    for k in 1..=k_trunc as i64 {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let re = ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let im = ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
        f.set_coeff(k, Complex64::new(re, im));
        f.set_coeff(-k, Complex64::new(re, -im));
    }
    let preserved = hilbert(&f).norm_sq();
    checks.push(
        CheckResult::asserted(
            "quarter-rotation",
            "isometry",
            Complex64::new(preserved, 0.0),
            Complex64::new(f.norm_sq(), 0.0),
            0.0,
        )
        .with_input("K", k_trunc.to_string())
        .with_note("coefficient norm preserved exactly"),
    );
    Ok(checks)
}
