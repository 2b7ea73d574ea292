use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::bernoulli::bernoulli_even_f64;
use crate::specfun::gamma::gamma;
use crate::specfun::precision::{AnalyticOrder, CirclePoint, Precision};
use crate::specfun::zeta::{hurwitz_zeta_prec, real_pow, riemann_zeta_prec};

const TAU: f64 = 2.0 * PI;

/// Li_s(e^{2 pi i x}) for x in (0,1).
///
/// Dispatch: closed forms at s = 0, 1; the defining series with an
/// Euler-Maclaurin tail for Re s > 1.5 (switching to the expansion around
/// the singular point when x sits in the endpoint boundary layer); the
/// functional-equation route through the Hurwitz zeta otherwise.
pub fn polylog_circle(s: AnalyticOrder, x: CirclePoint) -> Result<Complex64> {
    polylog_circle_prec(s, x, &Precision::default())
}

pub fn polylog_circle_prec(s: AnalyticOrder, x: CirclePoint, prec: &Precision) -> Result<Complex64> {
    let sv = s.value();
    if sv.re <= 1.0 && x.endpoint_distance() < 1e-9 {
        return Err(Error::Domain(format!(
            "Li_s on the circle is singular at the endpoints for Re s <= 1 (x = {})",
            x.get()
        )));
    }
    if x.get() > 0.5 {
        // Li_s(e^{2 pi i x}) = conj(Li_conj(s)(e^{2 pi i (1-x)}))
        return Ok(polylog_circle_prec(s.conj(), x.mirrored(), prec)?.conj());
    }
    if s.is_integer(1) {
        return Ok(li1(x.get()));
    }
    if s.is_integer(0) {
        let z = circle_exp(x.get());
        return Ok(z / (Complex64::new(1.0, 0.0) - z));
    }
    if sv.re > 1.5 {
        let series_k = series_terms_needed(sv, x.get());
        if series_k <= 4096 {
            polylog_series_route_reduced(sv, x.get(), prec)
        } else {
            polylog_mu_series(sv, x.get(), prec)
        }
    } else {
        polylog_hurwitz_route_reduced(sv, x.get(), prec)
    }
}

/// Li_1(e^{2 pi i x}) = -log(1 - e^{2 pi i x}).
fn li1(x: f64) -> Complex64 {
    // 1 - e^{i t} = 2 sin(t/2) e^{i(t - pi)/2}; stable for small x
    let t = TAU * x;
    let modulus = 2.0 * (0.5 * t).sin();
    let arg = 0.5 * (t - PI);
    -Complex64::new(modulus.ln(), arg)
}

fn circle_exp(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * x)
}

/// Evaluation through the defining series sum_k e^{2 pi i k x} k^{-s}.
///
/// The partial sum runs far enough that the Euler-Maclaurin tail (with the
/// oscillatory factor kept inside the summand) converges geometrically.
/// Exposed so the overlap-strip cross-check can compare routes.
pub fn polylog_series_route(s: AnalyticOrder, x: CirclePoint, prec: &Precision) -> Result<Complex64> {
    let sv = s.value();
    if sv.re <= 1.0 {
        return Err(Error::Domain(
            "series route requires Re s > 1 for a convergent defining series".into(),
        ));
    }
    if x.get() > 0.5 {
        return Ok(polylog_series_route(s.conj(), x.mirrored(), prec)?.conj());
    }
    polylog_series_route_reduced(sv, x.get(), prec)
}

const BYPARTS_DEPTH: usize = 48;

fn series_terms_needed(s: Complex64, x: f64) -> usize {
    let omega = TAU * x;
    let k = s.norm() + 2.0 * (s.norm() + BYPARTS_DEPTH as f64) / omega;
    (k.ceil() as usize).max(32)
}

fn polylog_series_route_reduced(s: Complex64, x: f64, prec: &Precision) -> Result<Complex64> {
    let k_cut = series_terms_needed(s, x);
    if k_cut > prec.max_terms {
        return plain_series_fallback(s, x, prec);
    }
    let omega = TAU * x;

    // Kahan-compensated partial sum of the first k_cut terms
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for k in 1..=k_cut {
        let term = Complex64::from_polar(1.0, omega * k as f64) * real_pow(k as f64, -s);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let tail = oscillatory_em_tail(s, omega, (k_cut + 1) as f64, prec.rel_tol);
    Ok(sum + tail)
}

/// When the accelerated cut exceeds the budget, fall back to plain partial
/// summation and accept only if the crude tail bound meets the tolerance.
fn plain_series_fallback(s: Complex64, x: f64, prec: &Precision) -> Result<Complex64> {
    let sigma = s.re;
    let omega = TAU * x;
    let k_max = prec.max_terms.min(20_000_000);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut k_used = 0usize;
    for k in 1..=k_max {
        sum += Complex64::from_polar(1.0, omega * k as f64) * real_pow(k as f64, -s);
        k_used = k;
        if k % 65_536 == 0 {
            let running = (k as f64).powf(1.0 - sigma) / (sigma - 1.0);
            if running <= prec.rel_tol * sum.norm().max(1e-30) {
                break;
            }
        }
    }
    let bound = (k_used as f64).powf(1.0 - sigma) / (sigma - 1.0);
    if bound > prec.rel_tol * sum.norm().max(1e-30) {
        return Err(Error::Convergence(format!(
            "series tail bound {bound:.3e} after {k_used} terms exceeds tolerance"
        )));
    }
    Ok(sum)
}

/// Euler-Maclaurin tail of sum_{k>=n0} e^{i omega k} k^{-s}.
fn oscillatory_em_tail(s: Complex64, omega: f64, n0: f64, tol: f64) -> Complex64 {
    let iw = Complex64::new(0.0, omega);
    let phase = Complex64::from_polar(1.0, omega * n0);
    let n_pow = real_pow(n0, -s);

    // integral_n0^inf t^{-s} e^{i omega t} dt by repeated integration by parts
    let mut integral = Complex64::new(0.0, 0.0);
    let mut term = -phase * n_pow / iw;
    let mut prev = f64::INFINITY;
    for m in 0..BYPARTS_DEPTH {
        integral += term;
        let next = term * (s + m as f64) / (n0 * iw);
        if next.norm() < tol * 1e-3 || next.norm() > prev {
            break;
        }
        prev = next.norm();
        term = next;
    }

    // f(n0)/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(n0), derivatives via the
    // coefficient recurrence p_{m+1}[j] = i omega p_m[j] - (s + j - 1) p_m[j-1]
    let f_n0 = phase * n_pow;
    let mut tail = integral + 0.5 * f_n0;
    let max_order = 2 * 20 - 1;
    let mut p = vec![Complex64::new(0.0, 0.0); max_order + 1];
    p[0] = Complex64::new(1.0, 0.0);
    let mut deg = 0usize;
    let inv_n = 1.0 / n0;
    let mut last = f64::INFINITY;
    for j in 1..=20usize {
        while deg < 2 * j - 1 {
            let mut q = vec![Complex64::new(0.0, 0.0); max_order + 1];
            for idx in 0..=deg {
                q[idx] += iw * p[idx];
                q[idx + 1] -= (s + idx as f64) * p[idx];
            }
            p = q;
            deg += 1;
        }
        // Horner in 1/n0
        let mut val = Complex64::new(0.0, 0.0);
        for idx in (0..=deg).rev() {
            val = val * inv_n + p[idx];
        }
        let deriv = f_n0 * val;
        let contrib = (bernoulli_even_f64(j) / factorial_f64(2 * j)) * deriv;
        tail -= contrib;
        let mag = contrib.norm();
        if mag < tol * 1e-3 || mag > last {
            break;
        }
        last = mag;
    }
    tail
}

/// Functional-equation route:
/// Li_s(e^{2 pi i x}) = i (2 pi)^{s-1} Gamma(1-s)
///     [ e^{-i pi s/2} zeta(1-s, x) - e^{+i pi s/2} zeta(1-s, 1-x) ],
/// principal branches throughout. Valid away from positive integer s.
pub fn polylog_hurwitz_route(s: AnalyticOrder, x: CirclePoint, prec: &Precision) -> Result<Complex64> {
    let sv = s.value();
    if sv.im == 0.0 && sv.re >= 1.0 && sv.re.fract() == 0.0 {
        return Err(Error::Pole(format!(
            "functional-equation route degenerates at positive integer s = {}",
            sv.re
        )));
    }
    if x.get() > 0.5 {
        return Ok(polylog_hurwitz_route(s.conj(), x.mirrored(), prec)?.conj());
    }
    polylog_hurwitz_route_reduced(sv, x.get(), prec)
}

fn polylog_hurwitz_route_reduced(s: Complex64, x: f64, prec: &Precision) -> Result<Complex64> {
    let one_minus = AnalyticOrder::new(Complex64::new(1.0, 0.0) - s)?;
    let z_plus = hurwitz_zeta_prec(one_minus, x, prec)?;
    let z_minus = hurwitz_zeta_prec(one_minus, 1.0 - x, prec)?;
    let half = Complex64::new(0.0, -0.5 * PI) * s;
    let g = gamma(Complex64::new(1.0, 0.0) - s)?;
    let scale = Complex64::new(0.0, 1.0) * real_pow(TAU, s - 1.0) * g;
    Ok(scale * (half.exp() * z_plus - (-half).exp() * z_minus))
}

/// Expansion around the endpoint, mu = 2 pi i x with |mu| < 2 pi:
///   Li_s(e^mu) = Gamma(1-s)(-mu)^{s-1} + sum_k zeta(s-k) mu^k / k!      (s not integer)
///   Li_n(e^mu) = mu^{n-1}/(n-1)! (H_{n-1} - log(-mu))
///              + sum_{k != n-1} zeta(n-k) mu^k / k!                     (integer n >= 2)
fn polylog_mu_series(s: Complex64, x: f64, prec: &Precision) -> Result<Complex64> {
    let mu = Complex64::new(0.0, TAU * x);
    let neg_mu_ln = Complex64::new((TAU * x).ln(), -0.5 * PI); // log(-mu), principal
    let tol = prec.rel_tol * 1e-2;

    let int_order = (s.im == 0.0 && s.re.fract() == 0.0 && s.re >= 2.0).then(|| s.re as i64);

    let mut sum = Complex64::new(0.0, 0.0);
    if let Some(n) = int_order {
        let mut harmonic = 0.0;
        for j in 1..n {
            harmonic += 1.0 / j as f64;
        }
        let lead = mu.powu((n - 1) as u32) / factorial_f64((n - 1) as usize);
        sum += lead * (Complex64::new(harmonic, 0.0) - neg_mu_ln);
    } else {
        // Gamma(1-s) (-mu)^{s-1}
        sum += gamma(Complex64::new(1.0, 0.0) - s)? * ((s - 1.0) * neg_mu_ln).exp();
    }

    let mut mu_pow = Complex64::new(1.0, 0.0); // mu^k / k!
    let mut converged = false;
    let mut small_run = 0;
    for k in 0..=120i64 {
        if k > 0 {
            mu_pow *= mu / k as f64;
        }
        let skip = int_order.map_or(false, |n| k == n - 1);
        if !skip {
            let zv = match int_order {
                Some(n) => Complex64::new(zeta_int_cached(n - k)?, 0.0),
                None => riemann_zeta_prec(AnalyticOrder::new(s - k as f64)?, prec)?,
            };
            let term = zv * mu_pow;
            sum += term;
            // zeta vanishes at the negative even integers, so one small term
            // is not evidence of convergence; demand a run of them
            if term.norm() < tol * sum.norm().max(1e-30) {
                small_run += 1;
                if k > 4 && small_run >= 3 {
                    converged = true;
                    break;
                }
            } else {
                small_run = 0;
            }
        }
    }
    if !converged {
        return Err(Error::Convergence("endpoint expansion did not settle".into()));
    }
    Ok(sum)
}

/// zeta at integer arguments: exact Bernoulli values on the left,
/// cached eta-route values on the right.
fn zeta_int_cached(j: i64) -> Result<f64> {
    use crate::specfun::bernoulli::bernoulli_number;
    if j == 0 {
        return Ok(-0.5);
    }
    if j < 0 {
        // zeta(-m) = -B_{m+1}/(m+1), m >= 1 (convention-free: odd B vanish)
        let m = (1 - j) as usize;
        return Ok(-bernoulli_number(m)? / m as f64);
    }
    if j == 1 {
        return Err(Error::Pole("zeta pole at 1".into()));
    }
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        let prec = Precision::default();
        (0..=80usize)
            .map(|n| {
                if n < 2 {
                    0.0
                } else {
                    riemann_zeta_prec((n as f64).into(), &prec).map(|v| v.re).unwrap_or(f64::NAN)
                }
            })
            .collect()
    });
    if (j as usize) < cache.len() {
        Ok(cache[j as usize])
    } else {
        Ok(1.0)
    }
}

fn factorial_f64(n: usize) -> f64 {
    let mut acc = 1.0;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}
