//! Seeded random matrices. Everything is deterministic per seed; campaign
//! drivers derive per-trial seeds as `seed + trial`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::matrix::ComplexMatrix;

/// Haar-distributed unitary matrix: QR of a complex Ginibre sample with the
/// R-diagonal phases absorbed into Q.
pub fn haar_unitary(n: usize, seed: u64) -> ComplexMatrix {
    assert!(n >= 1, "haar_unitary needs n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = StandardNormal;
    let g = ComplexMatrix::from_fn(n, n, |_, _| {
        let re: f64 = normal.sample(&mut rng);
        let im: f64 = normal.sample(&mut rng);
        Complex64::new(re, im) / 2f64.sqrt()
    });
    let (q, r_diag) = householder_qr(&g);
    // Phase normalization makes the distribution Haar rather than merely
    // orthonormal-column.
    let mut u = q;
    for j in 0..n {
        let d = r_diag[j];
        let phase = if d.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            d / d.norm()
        };
        for i in 0..n {
            u[(i, j)] *= phase;
        }
    }
    u
}

/// Householder QR returning the explicit Q and the diagonal of R.
fn householder_qr(a: &ComplexMatrix) -> (ComplexMatrix, Vec<Complex64>) {
    let n = a.nrows();
    let mut r = a.clone();
    let mut q = ComplexMatrix::identity(n);
    let mut v = vec![Complex64::new(0.0, 0.0); n];

    for k in 0..n {
        let norm_sq: f64 = (k..n).map(|i| r[(i, k)].norm_sqr()).sum();
        let norm = norm_sq.sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = r[(k, k)];
        let alpha = if x0.norm() == 0.0 {
            Complex64::new(-norm, 0.0)
        } else {
            -(x0 / x0.norm()) * norm
        };
        v[k] = x0 - alpha;
        for i in k + 1..n {
            v[i] = r[(i, k)];
        }
        let vnorm_sq: f64 = (k..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm_sq;

        // R <- H R on the trailing block.
        for j in k..n {
            let mut s = Complex64::new(0.0, 0.0);
            for i in k..n {
                s += v[i].conj() * r[(i, j)];
            }
            s *= beta;
            for i in k..n {
                let t = v[i] * s;
                r[(i, j)] -= t;
            }
        }
        // Q <- Q H (accumulate from the right).
        for i in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in k..n {
                s += q[(i, j)] * v[j];
            }
            s *= beta;
            for j in k..n {
                let t = s * v[j].conj();
                q[(i, j)] -= t;
            }
        }
    }
    let r_diag = (0..n).map(|i| r[(i, i)]).collect();
    (q, r_diag)
}
