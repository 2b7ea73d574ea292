//! Circle-side operators (Fourier series algebra, periodic Hilbert
//! transform, translations and modulations, Dirac-comb pairing) and
//! oscillator-side operators (Jacobi matrix, ladder operators, Weyl
//! displacements) with their algebraic laws.

mod circle;
mod fock;
mod fourier;

pub use circle::{conjugation_defect, cotangent_checks, quarter_rotation_checks, weak_derivative_check};
pub use fock::{
    commutator, jacobi_eigenvalues, jacobi_matrix, ladder_ops, weyl_displacement, FockOperator,
};
pub use fourier::{
    comb_pair, derivative, hilbert, hilbert_inverse, modulate, odd_bernoulli_series, pairing,
    translate, CombSpec, FourierSeries, KernelOrientation, Modulated,
};
