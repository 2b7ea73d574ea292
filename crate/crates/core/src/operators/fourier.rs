use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::poly::{classical_kernel_sign, kernel_coefficient};

/// Truncated bilateral Fourier series: coefficients for k in [-K, K],
/// evaluation f(x) = sum_k c_k e^{2 pi i k x}.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    k_max: usize,
    coeffs: Vec<Complex64>,
}

impl FourierSeries {
    pub fn zero(k_max: usize) -> Self {
        Self { k_max, coeffs: vec![Complex64::new(0.0, 0.0); 2 * k_max + 1] }
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    fn idx(&self, k: i64) -> Option<usize> {
        let shifted = k + self.k_max as i64;
        (0..=2 * self.k_max as i64).contains(&shifted).then_some(shifted as usize)
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        self.idx(k).map_or(Complex64::new(0.0, 0.0), |i| self.coeffs[i])
    }

    pub fn set_coeff(&mut self, k: i64, value: Complex64) {
        let i = self.idx(k).expect("mode outside truncation");
        self.coeffs[i] = value;
    }

    /// Modes with nonzero index, signed.
    pub fn modes(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let k_max = self.k_max as i64;
        self.coeffs.iter().enumerate().map(move |(i, &c)| (i as i64 - k_max, c))
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.modes() {
            acc += c * Complex64::from_polar(1.0, TAU * k as f64 * x);
        }
        acc
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn mean(&self) -> Complex64 {
        self.coeff(0)
    }

    /// Real-valued series satisfy c_{-k} = conj(c_k).
    pub fn is_conjugate_symmetric(&self, tol: f64) -> bool {
        (0..=self.k_max as i64)
            .all(|k| (self.coeff(-k) - self.coeff(k).conj()).norm() <= tol)
    }

    /// amplitude * sin(2 pi k x) as a series.
    pub fn sine_mode(k_max: usize, k: usize, amplitude: f64) -> Self {
        let mut f = Self::zero(k_max);
        f.set_coeff(k as i64, Complex64::new(0.0, -0.5 * amplitude));
        f.set_coeff(-(k as i64), Complex64::new(0.0, 0.5 * amplitude));
        f
    }

    /// amplitude * cos(2 pi k x) as a series.
    pub fn cosine_mode(k_max: usize, k: usize, amplitude: f64) -> Self {
        let mut f = Self::zero(k_max);
        f.set_coeff(k as i64, Complex64::new(0.5 * amplitude, 0.0));
        f.set_coeff(-(k as i64), Complex64::new(0.5 * amplitude, 0.0));
        f
    }

    /// Sample a callable on a uniform grid and project onto the modes
    /// |k| <= k_max (plain DFT; exact for band-limited inputs).
    pub fn from_fn(k_max: usize, f: impl Fn(f64) -> f64) -> Self {
        let n = 4 * k_max + 4;
        let samples: Vec<f64> = (0..n).map(|j| f(j as f64 / n as f64)).collect();
        let mut series = Self::zero(k_max);
        for k in -(k_max as i64)..=(k_max as i64) {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &v) in samples.iter().enumerate() {
                acc += v * Complex64::from_polar(1.0, -TAU * k as f64 * j as f64 / n as f64);
            }
            series.set_coeff(k, acc / n as f64);
        }
        series
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self { k_max: self.k_max, coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }
}

/// Which sign convention an odd-order sine kernel carries.
///
/// `Classical` matches the periodic extension of the Bernoulli polynomial;
/// `UniformSign` keeps the order-1 coefficient sign at every odd order
/// (the two differ by (-1)^n at order 2n+1), which is the orientation whose
/// Hilbert image at x = 0 is positive for every order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelOrientation {
    Classical,
    UniformSign,
}

/// The odd periodic Bernoulli kernel of order `2n+1` as a sine series.
pub fn odd_bernoulli_series(n: usize, k_max: usize, orientation: KernelOrientation) -> Result<FourierSeries> {
    let order = 2 * n + 1;
    if order > crate::specfun::MAX_BERNOULLI {
        return Err(Error::Range(format!("order {order} beyond supported kernels")));
    }
    let sign = match orientation {
        KernelOrientation::Classical => classical_kernel_sign(order),
        KernelOrientation::UniformSign => -1.0,
    };
    let coeff = sign * kernel_coefficient(order);
    let mut f = FourierSeries::zero(k_max);
    for k in 1..=k_max {
        let a = coeff / (k as f64).powi(order as i32);
        f.set_coeff(k as i64, Complex64::new(0.0, -0.5 * a));
        f.set_coeff(-(k as i64), Complex64::new(0.0, 0.5 * a));
    }
    Ok(f)
}

/// Periodic Hilbert transform: the multiplier -i sgn(k) with the mean
/// annihilated. Implemented as an exact swap/negate on each coefficient,
/// so repeated application and norm preservation hold bitwise.
pub fn hilbert(f: &FourierSeries) -> FourierSeries {
    let mut out = FourierSeries::zero(f.k_max);
    for (k, c) in f.modes() {
        let v = match k.signum() {
            1 => Complex64::new(c.im, -c.re),  // * -i
            -1 => Complex64::new(-c.im, c.re), // * +i
            _ => Complex64::new(0.0, 0.0),
        };
        out.set_coeff(k, v);
    }
    out
}

/// Inverse on the zero-mean subspace: the multiplier +i sgn(k).
pub fn hilbert_inverse(f: &FourierSeries) -> FourierSeries {
    let mut out = FourierSeries::zero(f.k_max);
    for (k, c) in f.modes() {
        let v = match k.signum() {
            1 => Complex64::new(-c.im, c.re),
            -1 => Complex64::new(c.im, -c.re),
            _ => Complex64::new(0.0, 0.0),
        };
        out.set_coeff(k, v);
    }
    out
}

/// Translation f(x) |-> f(x + t): coefficient k picks up e^{2 pi i k t}.
pub fn translate(f: &FourierSeries, t: f64) -> FourierSeries {
    let mut out = FourierSeries::zero(f.k_max);
    for (k, c) in f.modes() {
        out.set_coeff(k, c * Complex64::from_polar(1.0, TAU * k as f64 * t));
    }
    out
}

/// Modulation result: shifted series plus the squared norm pushed past the
/// truncation edge (reported, never thrown).
#[derive(Debug, Clone)]
pub struct Modulated {
    pub series: FourierSeries,
    pub dropped_norm_sq: f64,
}

/// Modulation f |-> e^{2 pi i n x} f: index shift k |-> k + n.
pub fn modulate(f: &FourierSeries, n: i64) -> Modulated {
    let mut out = FourierSeries::zero(f.k_max);
    let mut dropped = 0.0;
    for (k, c) in f.modes() {
        let shifted = k + n;
        if shifted.unsigned_abs() as usize <= f.k_max {
            out.set_coeff(shifted, c);
        } else {
            dropped += c.norm_sqr();
        }
    }
    Modulated { series: out, dropped_norm_sq: dropped }
}

/// Number of harmonics of the truncated Dirac comb sum_{|n|<=K} e^{2 pi i n x}.
#[derive(Debug, Clone, Copy)]
pub struct CombSpec {
    pub harmonics: usize,
}

/// Pairing of a test function with the truncated comb in coefficient space:
/// integral f * comb = sum_{|n|<=K} fhat(-n) -> f(0). Returns the value and
/// a tail estimate from the outer octave of retained coefficients.
pub fn comb_pair(f: &FourierSeries, spec: &CombSpec) -> (f64, f64) {
    let k = spec.harmonics.min(f.k_max());
    let mut acc = Complex64::new(0.0, 0.0);
    for n in -(k as i64)..=(k as i64) {
        acc += f.coeff(-n);
    }
    let mut tail = 0.0;
    for n in (k / 2).max(1)..=k {
        tail += f.coeff(n as i64).norm() + f.coeff(-(n as i64)).norm();
    }
    (acc.re, tail.max(1e-15))
}

/// Inner product in coefficient space: <f, g> = integral f g = sum_k fhat_k ghat_{-k}.
pub fn pairing(f: &FourierSeries, g: &FourierSeries) -> Complex64 {
    let k = f.k_max().max(g.k_max()) as i64;
    (-k..=k).map(|i| f.coeff(i) * g.coeff(-i)).sum()
}

/// Termwise derivative: coefficient k scales by 2 pi i k.
pub fn derivative(f: &FourierSeries) -> FourierSeries {
    let mut out = FourierSeries::zero(f.k_max());
    for (k, c) in f.modes() {
        out.set_coeff(k, c * Complex64::new(0.0, TAU * k as f64));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn hilbert_rotates_sine_to_minus_cosine_exactly() {
        for k in 1..=32usize {
            let sin = FourierSeries::sine_mode(32, k, 1.0);
            let expect = FourierSeries::cosine_mode(32, k, -1.0);
            assert_eq!(hilbert(&sin), expect);
            // and cosine to sine
            let cos = FourierSeries::cosine_mode(32, k, 1.0);
            assert_eq!(hilbert(&cos), FourierSeries::sine_mode(32, k, 1.0));
        }
    }

    #[test]
    fn hilbert_annihilates_the_mean() {
        let mut f = FourierSeries::zero(4);
        f.set_coeff(0, Complex64::new(3.0, -1.0));
        assert_eq!(hilbert(&f), FourierSeries::zero(4));
    }

    #[test]
    fn kernel_series_evaluates_like_the_plain_sum() {
        use crate::kernels::periodic_bernoulli;
        use crate::specfun::CirclePoint;
        let f = odd_bernoulli_series(1, 20_000, KernelOrientation::Classical).unwrap();
        let x = 0.25;
        let direct = periodic_bernoulli(3, CirclePoint::new(x).unwrap(), 20_000).unwrap();
        assert_relative_eq!(f.eval(x).re, direct.value, max_relative = 1e-12);
        assert!(f.eval(x).im.abs() < 1e-13);
        // uniform-sign orientation flips odd n
        let u = odd_bernoulli_series(1, 100, KernelOrientation::UniformSign).unwrap();
        let c = odd_bernoulli_series(1, 100, KernelOrientation::Classical).unwrap();
        assert_eq!(u.coeff(3), -c.coeff(3));
    }

    #[test]
    fn translation_by_integer_is_identity() {
        let f = FourierSeries::sine_mode(8, 3, 2.0);
        let g = translate(&f, 1.0);
        for k in -8i64..=8 {
            assert!((f.coeff(k) - g.coeff(k)).norm() < 1e-15);
        }
    }

    #[test]
    fn modulation_shifts_and_reports_loss() {
        let mut f = FourierSeries::zero(8);
        f.set_coeff(2, Complex64::new(1.0, 0.0));
        let m = modulate(&f, 3);
        assert_eq!(m.series.coeff(5), Complex64::new(1.0, 0.0));
        assert_eq!(m.dropped_norm_sq, 0.0);
        let m = modulate(&f, 7);
        assert_eq!(m.dropped_norm_sq, 1.0);
        assert_eq!(m.series.norm_sq(), 0.0);
    }

    #[test]
    fn translate_modulate_commutation_phase() {
        // oracle: direct coefficient algebra gives
        // translate(modulate(f,n), t) = e^{+2 pi i n t} modulate(translate(f,t), n)
        let mut f = FourierSeries::zero(6);
        f.set_coeff(1, Complex64::new(0.3, -0.2));
        f.set_coeff(-4, Complex64::new(1.0, 1.0));
        let (n, t) = (2i64, 0.37);
        let lhs = translate(&modulate(&f, n).series, t);
        let rhs = modulate(&translate(&f, t), n).series;
        let phase = Complex64::from_polar(1.0, TAU * n as f64 * t);
        for k in -6i64..=6 {
            assert!((lhs.coeff(k) - phase * rhs.coeff(k)).norm() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn comb_pairing_examples() {
        // f = 1
        let mut one = FourierSeries::zero(4);
        one.set_coeff(0, Complex64::new(1.0, 0.0));
        assert_relative_eq!(comb_pair(&one, &CombSpec { harmonics: 4 }).0, 1.0);
        // f = sin^2(pi x) = 1/2 - cos(2 pi x)/2 -> f(0) = 0
        let f = FourierSeries::from_fn(4, |x| (std::f64::consts::PI * x).sin().powi(2));
        let (v, _) = comb_pair(&f, &CombSpec { harmonics: 4 });
        assert!(v.abs() < 1e-12, "got {v}");
    }

    #[test]
    fn comb_pairing_converges_to_point_evaluation() {
        // smoothed bump centered at 0.5: heat-kernel coefficients
        let sigma = 0.08f64;
        let mut f = FourierSeries::zero(256);
        for k in -256i64..=256 {
            let kf = k as f64;
            let mag = (-2.0 * std::f64::consts::PI.powi(2) * sigma * sigma * kf * kf).exp();
            f.set_coeff(k, Complex64::from_polar(1.0, -TAU * kf * 0.5) * mag);
        }
        let f0 = f.eval(0.0).re;
        let (v, tail) = comb_pair(&f, &CombSpec { harmonics: 256 });
        assert!((v - f0).abs() <= tail + 1e-12);
    }

    proptest! {
        #[test]
        fn hilbert_involution_and_isometry(coeffs in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 9)) {
            let mut f = FourierSeries::zero(4);
            for (i, (re, im)) in coeffs.iter().enumerate() {
                f.set_coeff(i as i64 - 4, Complex64::new(*re, *im));
            }
            f.set_coeff(0, Complex64::new(0.0, 0.0)); // zero-mean subspace
            let h2 = hilbert(&hilbert(&f));
            let h4 = hilbert(&hilbert(&h2));
            for k in -4i64..=4 {
                prop_assert_eq!(h2.coeff(k), -f.coeff(k));
                prop_assert_eq!(h4.coeff(k), f.coeff(k));
            }
            prop_assert_eq!(hilbert(&f).norm_sq(), f.norm_sq());
        }

        #[test]
        fn parseval_grid_vs_coefficients(coeffs in proptest::collection::vec(-1.0f64..1.0, 5)) {
            // real series from random sine/cosine amplitudes
            let k_max = 16usize;
            let mut f = FourierSeries::zero(k_max);
            for (i, a) in coeffs.iter().enumerate() {
                let k = i + 1;
                f.set_coeff(k as i64, Complex64::new(*a * 0.5, -0.1 * *a));
                f.set_coeff(-(k as i64), Complex64::new(*a * 0.5, 0.1 * *a));
            }
            let grid = 4 * k_max + 1;
            let quad: f64 = (0..grid)
                .map(|j| f.eval(j as f64 / grid as f64).norm_sqr())
                .sum::<f64>() / grid as f64;
            prop_assert!((quad - f.norm_sq()).abs() < 1e-10);
        }
    }
}
