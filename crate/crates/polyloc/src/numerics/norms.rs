//! Extreme singular values via power iteration.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lu;
use super::matrix::ComplexMatrix;
use crate::error::Result;
use crate::tol;

const MAX_ITERS: usize = 400;

/// Largest singular value, by power iteration on `A* A`.
pub fn spectral_norm(a: &ComplexMatrix) -> Result<f64> {
    let n = a.order()?;
    if n == 0 {
        return Ok(0.0);
    }
    if a.max_abs() == 0.0 {
        return Ok(0.0);
    }
    let mut v = seeded_unit_vector(n, 0x5eed_0001);
    let mut sigma = 0.0f64;
    for _ in 0..MAX_ITERS {
        let w = a.matvec(&v);
        let new_sigma = vec_norm(&w);
        if new_sigma == 0.0 {
            return Ok(0.0);
        }
        let mut u = a.adjoint_matvec(&w);
        let un = vec_norm(&u);
        if un == 0.0 {
            return Ok(new_sigma);
        }
        for z in &mut u {
            *z /= un;
        }
        v = u;
        if (new_sigma - sigma).abs() <= tol::SIGMA_REL * new_sigma {
            return Ok(new_sigma);
        }
        sigma = new_sigma;
    }
    Ok(sigma)
}

/// Smallest singular value, by inverse power iteration on the Gram operator
/// through the LU factors (two triangular solves per step). Exactly
/// rank-deficient input short-circuits to zero.
pub fn sigma_min(a: &ComplexMatrix) -> Result<f64> {
    let n = a.order()?;
    if n == 0 {
        return Ok(0.0);
    }
    if a.max_abs() == 0.0 {
        return Ok(0.0);
    }
    let lu = lu::factor(a);
    if lu.exactly_singular() {
        return Ok(0.0);
    }

    let mut v = seeded_unit_vector(n, 0x5eed_0002);
    let mut sigma = f64::INFINITY;
    for _ in 0..MAX_ITERS {
        // u = (A A*)^{-1} v
        let w = lu.solve_floored(&v, 0.0);
        let mut u = lu.solve_adjoint_floored(&w, 0.0);
        let mu = vec_norm(&u);
        if !mu.is_finite() || mu == 0.0 {
            return Ok(0.0);
        }
        let new_sigma = 1.0 / mu.sqrt();
        for z in &mut u {
            *z /= mu;
        }
        v = u;
        if (new_sigma - sigma).abs() <= tol::SIGMA_REL * new_sigma.max(f64::MIN_POSITIVE) {
            return Ok(new_sigma);
        }
        sigma = new_sigma;
    }
    Ok(sigma)
}

/// Maximum absolute row sum.
pub fn inf_norm(a: &ComplexMatrix) -> f64 {
    a.inf_norm()
}

/// Determinant via pivoted triangular factorization; exact (up to sign
/// bookkeeping) for permutation matrices.
pub fn det(a: &ComplexMatrix) -> Result<Complex64> {
    a.order()?;
    Ok(lu::factor(a).det())
}

fn seeded_unit_vector(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = vec_norm(&v);
    for z in &mut v {
        *z /= norm;
    }
    v
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
