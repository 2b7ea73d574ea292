use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_DIM: usize = 512;

/// Dense operator on the truncated oscillator basis {phi_0 .. phi_{N-1}}.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    mat: DMatrix<Complex64>,
}

impl FockOperator {
    pub fn from_matrix(mat: DMatrix<Complex64>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols(), "fock operators are square");
        Self { mat }
    }

    pub fn identity(dim: usize) -> Self {
        Self { mat: DMatrix::identity(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.mat[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self { mat: self.mat.adjoint() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { mat: &self.mat * &other.mat }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self { mat: self.mat.map(|v| v * factor) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { mat: &self.mat - &other.mat }
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        if self.mat.nrows() == 0 {
            return 0.0;
        }
        self.mat.clone().svd(false, false).singular_values[0]
    }

    /// || D^dagger D - I || over the full truncated basis.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.dim();
        let prod = self.mat.adjoint() * &self.mat;
        let dev = prod - DMatrix::<Complex64>::identity(n, n);
        FockOperator::from_matrix(dev).operator_norm()
    }

    /// Same deviation restricted to the leading `block` x `block` corner,
    /// where truncation damage is smallest.
    pub fn block_unitarity_defect(&self, block: usize) -> f64 {
        let n = self.dim().min(block);
        let prod = self.mat.adjoint() * &self.mat;
        let dev = prod.view((0, 0), (n, n)) - DMatrix::<Complex64>::identity(n, n);
        FockOperator::from_matrix(dev.into_owned()).operator_norm()
    }
}

/// Annihilation and creation operators: a phi_m = sqrt(m) phi_{m-1},
/// a-dagger its transpose. The commutator [a, a!] is the identity except for
/// the last diagonal entry 1 - N, the truncation artifact.
pub fn ladder_ops(dim: usize) -> Result<(FockOperator, FockOperator)> {
    if !(2..=MAX_DIM).contains(&dim) {
        return Err(Error::Range(format!("ladder dimension must be in 2..={MAX_DIM}, got {dim}")));
    }
    let mut a = DMatrix::<Complex64>::zeros(dim, dim);
    for m in 1..dim {
        a[(m - 1, m)] = Complex64::new((m as f64).sqrt(), 0.0);
    }
    let adag = a.transpose();
    Ok((FockOperator::from_matrix(a), FockOperator::from_matrix(adag)))
}

/// The real-symmetric tridiagonal position operator (a + a!)/sqrt(2), whose
/// action is J phi_m = sqrt(m/2) phi_{m-1} + sqrt((m+1)/2) phi_{m+1}.
pub fn jacobi_matrix(dim: usize) -> Result<FockOperator> {
    if !(2..=MAX_DIM).contains(&dim) {
        return Err(Error::Range(format!("jacobi dimension must be in 2..={MAX_DIM}, got {dim}")));
    }
    let mut j = DMatrix::<Complex64>::zeros(dim, dim);
    for m in 1..dim {
        // sqrt(m) * (1/sqrt 2), bitwise identical to scaling the ladder sum
        let beta = (m as f64).sqrt() * std::f64::consts::FRAC_1_SQRT_2;
        j[(m - 1, m)] = Complex64::new(beta, 0.0);
        j[(m, m - 1)] = Complex64::new(beta, 0.0);
    }
    Ok(FockOperator::from_matrix(j))
}

/// Eigenvalues of the truncated Jacobi matrix, ascending.
pub fn jacobi_eigenvalues(dim: usize) -> Result<Vec<f64>> {
    if !(2..=MAX_DIM).contains(&dim) {
        return Err(Error::Range(format!("jacobi dimension must be in 2..={MAX_DIM}, got {dim}")));
    }
    let mut j = DMatrix::<f64>::zeros(dim, dim);
    for m in 1..dim {
        let beta = (m as f64).sqrt() * std::f64::consts::FRAC_1_SQRT_2;
        j[(m - 1, m)] = beta;
        j[(m, m - 1)] = beta;
    }
    let eigen = nalgebra::SymmetricEigen::new(j);
    let mut vals: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Unitary displacement with exponent i(xi p - eta q) on the truncated basis,
/// q = (a + a!)/sqrt(2), p = i(a! - a)/sqrt(2). Obeys the twisted product
/// D(xi,eta) D(xi',eta') = e^{-i(xi eta' - eta xi')/2} D(xi+xi', eta+eta')
/// up to truncation, which concentrates in the top quarter of the basis.
pub fn weyl_displacement(xi: f64, eta: f64, dim: usize) -> Result<FockOperator> {
    if xi.abs() > 2.0 || eta.abs() > 2.0 {
        return Err(Error::Domain(format!("displacement arguments limited to |.| <= 2, got ({xi}, {eta})")));
    }
    let needed = (8.0 * (1.0 + xi * xi + eta * eta)).ceil() as usize;
    if dim < needed {
        return Err(Error::Domain(format!(
            "dimension {dim} too small for ({xi}, {eta}); need at least {needed}"
        )));
    }
    if dim > MAX_DIM {
        return Err(Error::Range(format!("dimension must be <= {MAX_DIM}")));
    }
    let (a, adag) = ladder_ops(dim)?;
    let sqrt2 = 2.0f64.sqrt();
    // i(xi p - eta q) = [-xi (a! - a) - i eta (a! + a)] / sqrt(2)
    let exponent = adag
        .sub(&a)
        .scaled(Complex64::new(-xi / sqrt2, 0.0))
        .matrix()
        .clone()
        + (adag.matrix() + a.matrix()).map(|v| v * Complex64::new(0.0, -eta / sqrt2));
    let displacement = FockOperator::from_matrix(expm(&exponent));
    let defect = displacement.block_unitarity_defect(dim / 2);
    if defect > 1e-6 {
        return Err(Error::Truncation(format!(
            "protected-block unitarity defect {defect:.3e} exceeds 1e-6 at dimension {dim}"
        )));
    }
    Ok(displacement)
}

/// Matrix exponential by scaling-and-squaring with the order-13 Pade
/// approximant (coefficients from the standard double-precision tuning).
pub(crate) fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    const THETA_13: f64 = 5.371920351148152;
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let n = a.nrows();
    let one_norm = (0..n)
        .map(|j| (0..n).map(|i| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0f64, f64::max);
    let squarings = if one_norm > THETA_13 {
        (one_norm / THETA_13).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.map(|v| v / 2f64.powi(squarings as i32));

    let ident = DMatrix::<Complex64>::identity(n, n);
    let a2 = &scaled * &scaled;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;

    let u_inner = &a6 * (a6.map(|v| v * B[13]) + a4.map(|v| v * B[11]) + a2.map(|v| v * B[9]))
        + a6.map(|v| v * B[7])
        + a4.map(|v| v * B[5])
        + a2.map(|v| v * B[3])
        + ident.map(|v| v * B[1]);
    let u = &scaled * u_inner;
    let v = &a6 * (a6.map(|x| x * B[12]) + a4.map(|x| x * B[10]) + a2.map(|x| x * B[8]))
        + a6.map(|x| x * B[6])
        + a4.map(|x| x * B[4])
        + a2.map(|x| x * B[2])
        + ident.map(|x| x * B[0]);

    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut result = lhs
        .lu()
        .solve(&rhs)
        .expect("Pade denominator is invertible for scaled exponents");
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// [A, B] = AB - BA.
pub fn commutator(a: &FockOperator, b: &FockOperator) -> FockOperator {
    FockOperator::from_matrix(a.matrix() * b.matrix() - b.matrix() * a.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ladder_shapes() {
        let (a, adag) = ladder_ops(2).unwrap();
        assert_eq!(a.entry(0, 1), Complex64::new(1.0, 0.0));
        assert_eq!(a.entry(1, 0), Complex64::new(0.0, 0.0));
        assert_eq!(adag.entry(1, 0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn commutator_is_identity_with_truncation_corner() {
        // oracle: the symbolic bidiagonal product gives (a a!)_mm = m+1 and
        // (a! a)_mm = m, except (a a!)_{N-1,N-1} = 0
        let n = 10;
        let (a, adag) = ladder_ops(n).unwrap();
        let c = commutator(&a, &adag);
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((c.entry(i, j) - Complex64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
        assert_relative_eq!(c.entry(n - 1, n - 1).re, 1.0 - n as f64, max_relative = 1e-12);
    }

    #[test]
    fn number_operator_diagonal() {
        let n = 6;
        let (a, adag) = ladder_ops(n).unwrap();
        let num = adag.mul(&a);
        for m in 0..n {
            assert_relative_eq!(num.entry(m, m).re, m as f64, max_relative = 1e-12);
        }
    }

    #[test]
    fn jacobi_is_symmetric_and_matches_ladder_combination() {
        let n = 12;
        let j = jacobi_matrix(n).unwrap();
        let (a, adag) = ladder_ops(n).unwrap();
        let sum = FockOperator::from_matrix(
            (a.matrix() + adag.matrix()).map(|v| v / Complex64::new(2f64.sqrt(), 0.0)),
        );
        for r in 0..n {
            for c in 0..n {
                assert_eq!(j.entry(r, c), j.entry(c, r));
                assert!((j.entry(r, c) - sum.entry(r, c)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn jacobi_eigenvalues_low_order_closed_forms() {
        // oracle: 2x2 eigenvalues +-sqrt(1/2); 3x3 characteristic polynomial
        // gives {0, +-sqrt(3/2)}
        let e2 = jacobi_eigenvalues(2).unwrap();
        assert_relative_eq!(e2[1], 0.5f64.sqrt(), max_relative = 1e-12);
        assert_relative_eq!(e2[0], -(0.5f64.sqrt()), max_relative = 1e-12);
        let e3 = jacobi_eigenvalues(3).unwrap();
        assert!(e3[1].abs() < 1e-14);
        assert_relative_eq!(e3[2], 1.5f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn expm_matches_taylor_series() {
        // oracle: plain power series to 30 terms
        let n = 16;
        let (a, adag) = ladder_ops(n).unwrap();
        let x = (adag.matrix() - a.matrix()).map(|v| v * Complex64::new(0.4, 0.0));
        let pade = expm(&x);
        let mut taylor = DMatrix::<Complex64>::identity(n, n);
        let mut power = DMatrix::<Complex64>::identity(n, n);
        for k in 1..30 {
            power = &power * &x / Complex64::new(k as f64, 0.0);
            taylor += &power;
        }
        let diff = (&pade - &taylor).map(|v| v.norm()).max();
        assert!(diff < 1e-12, "pade vs taylor: {diff}");
    }

    #[test]
    fn displacement_identity_and_unitarity() {
        let d = weyl_displacement(0.0, 0.0, 16).unwrap();
        let diff = (d.matrix() - DMatrix::<Complex64>::identity(16, 16))
            .map(|v| v.norm())
            .max();
        assert_eq!(diff, 0.0, "D(0,0) must be the exact identity");
        let d = weyl_displacement(0.5, -0.3, 32).unwrap();
        assert!(d.block_unitarity_defect(16) < 1e-10);
    }

    #[test]
    fn displacement_composition_phase() {
        let n = 40;
        let d1 = weyl_displacement(0.3, 0.0, n).unwrap();
        let d2 = weyl_displacement(0.0, 0.3, n).unwrap();
        let product = d1.mul(&d2);
        let combined = weyl_displacement(0.3, 0.3, n).unwrap();
        let phase = Complex64::from_polar(1.0, -0.045);
        let block = n / 2;
        let mut worst = 0.0f64;
        for r in 0..block {
            for c in 0..block {
                worst = worst.max((product.entry(r, c) - phase * combined.entry(r, c)).norm());
            }
        }
        assert!(worst < 1e-8, "block residual {worst}");
    }

    #[test]
    fn vacuum_overlap_is_gaussian() {
        // oracle: the power-series exponential gives <0|D(t,0)|0> = e^{-t^2/4}
        let t = 0.5;
        let d = weyl_displacement(t, 0.0, 24).unwrap();
        assert_relative_eq!(d.entry(0, 0).norm(), (-t * t / 4.0).exp(), max_relative = 1e-12);
    }

    #[test]
    fn guards() {
        assert!(matches!(ladder_ops(1), Err(Error::Range(_))));
        assert!(matches!(jacobi_matrix(600), Err(Error::Range(_))));
        assert!(matches!(weyl_displacement(3.0, 0.0, 64), Err(Error::Domain(_))));
        assert!(matches!(weyl_displacement(1.0, 1.0, 8), Err(Error::Domain(_))));
    }
}
