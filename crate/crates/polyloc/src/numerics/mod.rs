//! Dense complex linear algebra: norms, determinants, singular-value
//! extremes, Haar-random unitaries, and a general nonsymmetric eigensolver.

mod eig;
mod lu;
mod matrix;
mod norms;
mod random;

pub use eig::{eigenvalues_dense, scalar_roots, spectral_radius};
pub use matrix::ComplexMatrix;
pub use norms::{det, inf_norm, sigma_min, spectral_norm};
pub use random::haar_unitary;

pub(crate) use lu::factor as lu_factor;

use num_complex::Complex64;

use crate::error::Result;
use crate::tol;

/// Finite eigenvalues of a matrix (or matrix polynomial) with multiplicity by
/// repetition, plus a backward-error style residual per eigenvalue.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<Complex64>,
    residuals: Vec<f64>,
}

impl Spectrum {
    pub fn new(eigenvalues: Vec<Complex64>, residuals: Vec<f64>) -> Self {
        assert_eq!(eigenvalues.len(), residuals.len());
        Self {
            eigenvalues,
            residuals,
        }
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn count(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(|z| z.norm()).collect()
    }

    pub fn max_modulus(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn min_modulus(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Scale-invariant singularity test: `sigma_min(A) <= threshold * ||A||_2`.
pub fn is_numerically_singular(a: &ComplexMatrix) -> Result<bool> {
    let smin = sigma_min(a)?;
    let smax = spectral_norm(a)?;
    Ok(smin <= tol::SINGULARITY * smax)
}
