//! Shared test oracles, deliberately independent of the library's own
//! evaluation and linearization paths.

#![allow(dead_code)]

use num_complex::Complex64;
use polyloc::{ComplexMatrix, MatrixPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bisection root finder for a continuous function with a sign change on
/// `[lo, hi]`. The oracle for every frozen real-root constant.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(
        flo.signum() != f(hi).signum(),
        "bisection needs a sign change on [{lo}, {hi}]"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Symmetric Hausdorff distance between two point multisets.
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    let one_sided = |from: &[Complex64], to: &[Complex64]| {
        from.iter()
            .map(|x| {
                to.iter()
                    .map(|y| (x - y).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one_sided(a, b).max(one_sided(b, a))
}

// --- test-local scalar polynomial arithmetic (ascending coefficients) ---

pub fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_add(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

pub fn poly_neg(a: &[Complex64]) -> Vec<Complex64> {
    a.iter().map(|&x| -x).collect()
}

/// Determinant of a matrix polynomial by symbolic Laplace expansion over
/// polynomial entries. Exponential in `n`, fine for the n <= 3 oracle duty.
pub fn cofactor_det_poly(p: &MatrixPolynomial) -> Vec<Complex64> {
    let n = p.size();
    let entries: Vec<Vec<Vec<Complex64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| p.coeffs().iter().map(|a| a[(i, j)]).collect())
                .collect()
        })
        .collect();
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    laplace(&entries, &rows, &cols)
}

fn laplace(entries: &[Vec<Vec<Complex64>>], rows: &[usize], cols: &[usize]) -> Vec<Complex64> {
    if rows.len() == 1 {
        return entries[rows[0]][cols[0]].clone();
    }
    let mut det = vec![Complex64::new(0.0, 0.0)];
    let sub_rows: Vec<usize> = rows[1..].to_vec();
    for (k, &col) in cols.iter().enumerate() {
        let minor_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != k)
            .map(|(_, &c)| c)
            .collect();
        let minor = laplace(entries, &sub_rows, &minor_cols);
        let term = poly_mul(&entries[rows[0]][col], &minor);
        det = if k % 2 == 0 {
            poly_add(&det, &term)
        } else {
            poly_add(&det, &poly_neg(&term))
        };
    }
    det
}

/// Random dense matrix polynomial with complex entries in the unit square
/// per component; retries the seed offset until the leading coefficient is
/// comfortably nonsingular so the companion linearization applies.
pub fn random_dense_polynomial(n: usize, m: usize, seed: u64) -> MatrixPolynomial {
    let mut offset = 0u64;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(offset * 0x9e3779b9));
        let coeffs: Vec<ComplexMatrix> = (0..=m)
            .map(|_| {
                ComplexMatrix::from_fn(n, n, |_, _| {
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                })
            })
            .collect();
        let p = MatrixPolynomial::new(coeffs).expect("random coefficients are valid");
        let lead_ok = polyloc::numerics::sigma_min(p.leading()).unwrap()
            > 1e-3 * polyloc::numerics::spectral_norm(p.leading()).unwrap();
        if lead_ok {
            return p;
        }
        offset += 1;
    }
}
