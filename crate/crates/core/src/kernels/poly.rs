use std::f64::consts::{PI, TAU};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::specfun::{bernoulli_rational, factorial, rational_to_f64, CirclePoint, MAX_BERNOULLI};

/// A truncated-series value together with its recorded tail bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated {
    pub value: f64,
    pub tail_bound: f64,
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
///
/// The Horner pass runs in exact rational arithmetic (x is lifted to the
/// dyadic rational it represents) and rounds once at the end, so the large
/// alternating coefficients at high order cost no precision.
pub fn bernoulli_poly(n: usize, x: f64) -> Result<f64> {
    if n > MAX_BERNOULLI {
        return Err(Error::Range(format!("bernoulli_poly supports n <= {MAX_BERNOULLI}, got {n}")));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("non-finite x = {x}")));
    }
    let xr = BigRational::from_float(x).expect("finite f64 is rational");
    // coefficients of B_n in descending powers: C(n,k) B_k multiplies x^{n-k}
    let mut acc = BigRational::new(BigInt::from(0), BigInt::one());
    let mut binom = BigInt::one();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(BigRational::from(binom.clone()) * bernoulli_rational(k)?);
        if k < n {
            binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
        }
    }
    // coeffs[k] multiplies x^{n-k}: Horner in descending powers
    for coeff in &coeffs {
        acc = acc * &xr + coeff;
    }
    Ok(rational_to_f64(&acc))
}

/// Sign of the classical Fourier form of the periodic Bernoulli kernel:
/// Btilde_n = sign(n) * 2 n!/(2 pi)^n * sum trig(2 pi k x)/k^n with
/// sine for odd n, cosine for even n.
pub(crate) fn classical_kernel_sign(n: usize) -> f64 {
    if (n / 2 + 1) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Coefficient magnitude 2 n!/(2 pi)^n shared by both kernel families.
pub(crate) fn kernel_coefficient(n: usize) -> f64 {
    2.0 * factorial(n) / TAU.powi(n as i32)
}

/// Periodic Bernoulli kernel by plain truncated Fourier summation.
///
/// For n >= 2 this converges to `bernoulli_poly(n, x)` on (0,1); the tail
/// bound comes from the monotone coefficient decay (power tail for n >= 2,
/// Abel/Dirichlet bound for the slowly converging n = 1).
pub fn periodic_bernoulli(n: usize, x: CirclePoint, k_trunc: usize) -> Result<Truncated> {
    if n == 0 || n > MAX_BERNOULLI {
        return Err(Error::Range(format!("kernel order must be in 1..={MAX_BERNOULLI}, got {n}")));
    }
    if k_trunc == 0 {
        return Err(Error::Range("truncation must be >= 1".into()));
    }
    let xv = x.get();
    let coeff = classical_kernel_sign(n) * kernel_coefficient(n);
    let odd = n % 2 == 1;
    let mut sum = 0.0f64;
    for k in 1..=k_trunc {
        let angle = TAU * xv * k as f64;
        let trig = if odd { angle.sin() } else { angle.cos() };
        sum += trig / (k as f64).powi(n as i32);
    }
    Ok(Truncated {
        value: coeff * sum,
        tail_bound: coeff.abs() * trig_tail_bound(n, xv, k_trunc),
    })
}

/// Tail of sum_{k>K} trig(2 pi k x)/k^n.
pub(crate) fn trig_tail_bound(n: usize, x: f64, k_trunc: usize) -> f64 {
    let kf = k_trunc as f64;
    if n >= 2 {
        kf.powi(1 - n as i32) / (n as f64 - 1.0) + kf.powi(-(n as i32))
    } else {
        // Abel summation against the bounded Dirichlet partial sums
        1.0 / ((kf + 1.0) * (PI * x).sin().abs())
    }
}
