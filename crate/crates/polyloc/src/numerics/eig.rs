//! Dense nonsymmetric eigensolver: diagonal balancing, Householder reduction
//! to Hessenberg form, and implicit single-shift QR with deflation.

use num_complex::Complex64;

use super::lu;
use super::matrix::ComplexMatrix;
use super::Spectrum;
use crate::error::{Error, Result};
use crate::tol;

const EPS: f64 = f64::EPSILON;

/// All eigenvalues of a square matrix, with per-eigenvalue residuals
/// `||Av - lv||_2 / ||v||_2` from inverse-iteration eigenvector recovery.
pub fn eigenvalues_dense(a: &ComplexMatrix) -> Result<Spectrum> {
    let n = a.order()?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if n == 1 {
        return Ok(Spectrum::new(vec![a[(0, 0)]], vec![0.0]));
    }

    let mut h = a.clone();
    balance(&mut h);
    hessenberg_in_place(&mut h);
    let mut eigs = qr_eigenvalues(&mut h)?;
    eigs.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));

    let residuals = eigs.iter().map(|&l| eigenvalue_residual(a, l)).collect();
    Ok(Spectrum::new(eigs, residuals))
}

/// Maximum eigenvalue modulus.
pub fn spectral_radius(a: &ComplexMatrix) -> Result<f64> {
    Ok(eigenvalues_dense(a)?.max_modulus())
}

/// Roots of a scalar polynomial given by ascending coefficients, via the
/// companion matrix of its monic normalization.
pub fn scalar_roots(coeffs: &[Complex64]) -> Result<Spectrum> {
    let Some(&lead) = coeffs.last() else {
        return Err(Error::Degree("empty coefficient list".into()));
    };
    if lead.norm() == 0.0 {
        return Err(Error::Degree("zero leading coefficient".into()));
    }
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Err(Error::Degree("constant polynomial has no roots".into()));
    }
    let monic: Vec<Complex64> = coeffs[..deg].iter().map(|&c| c / lead).collect();
    let mut comp = ComplexMatrix::zeros(deg, deg);
    for i in 0..deg.saturating_sub(1) {
        comp[(i, i + 1)] = Complex64::new(1.0, 0.0);
    }
    for j in 0..deg {
        comp[(deg - 1, j)] = -monic[j];
    }
    eigenvalues_dense(&comp)
}

/// Parlett–Reinsch balancing: diagonal similarity scaling by powers of two
/// so opposite row/column norms match. Exact in floating point and improves
/// QR accuracy on companion matrices of higher degree.
fn balance(h: &mut ComplexMatrix) {
    const RADIX: f64 = 2.0;
    let n = h.nrows();
    let mut converged = false;
    let mut passes = 0;
    while !converged && passes < 100 {
        converged = true;
        passes += 1;
        for i in 0..n {
            let mut col: f64 = 0.0;
            let mut row: f64 = 0.0;
            for j in 0..n {
                if j != i {
                    col += h[(j, i)].re.abs() + h[(j, i)].im.abs();
                    row += h[(i, j)].re.abs() + h[(i, j)].im.abs();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let s = col + row;
            let mut f = 1.0;
            let mut c = col;
            while c < row / RADIX {
                f *= RADIX;
                c *= RADIX * RADIX;
            }
            while c >= row * RADIX {
                f /= RADIX;
                c /= RADIX * RADIX;
            }
            if (c + row) / f < 0.95 * s {
                converged = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    h[(i, j)] *= inv;
                }
                for j in 0..n {
                    h[(j, i)] *= f;
                }
            }
        }
    }
}

/// Householder reduction to upper Hessenberg form, in place.
fn hessenberg_in_place(h: &mut ComplexMatrix) {
    let n = h.nrows();
    if n < 3 {
        return;
    }
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n - 2 {
        let norm_sq: f64 = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum();
        let norm = norm_sq.sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let alpha = if x0.norm() == 0.0 {
            Complex64::new(-norm, 0.0)
        } else {
            -(x0 / x0.norm()) * norm
        };
        // v = x - alpha e1; with this sign choice v* x is real positive.
        v[k + 1] = x0 - alpha;
        for i in k + 2..n {
            v[i] = h[(i, k)];
        }
        let vnorm_sq: f64 = (k + 1..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm_sq;

        // Left: H[k+1.., k..] -= beta v (v* H)
        for j in k..n {
            let mut s = Complex64::new(0.0, 0.0);
            for i in k + 1..n {
                s += v[i].conj() * h[(i, j)];
            }
            s *= beta;
            for i in k + 1..n {
                let t = v[i] * s;
                h[(i, j)] -= t;
            }
        }
        // Right: H[.., k+1..] -= beta (H v) v*
        for i in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in k + 1..n {
                s += h[(i, j)] * v[j];
            }
            s *= beta;
            for j in k + 1..n {
                let t = s * v[j].conj();
                h[(i, j)] -= t;
            }
        }
        h[(k + 1, k)] = alpha;
        for i in k + 2..n {
            h[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }
}

/// Unitary plane rotation `[[c, s], [-conj(s), c]]` (real `c >= 0`) mapping
/// `(f, g)` to `(r, 0)`.
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64) {
    let fn_ = f.norm();
    let gn = g.norm();
    if gn == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    if fn_ == 0.0 {
        return (0.0, g.conj() / gn);
    }
    let d = (fn_ * fn_ + gn * gn).sqrt();
    let c = fn_ / d;
    let s = (f / fn_) * (g.conj() / d);
    (c, s)
}

/// Eigenvalues of `[[a, b], [c, d]]`, the larger-magnitude root first,
/// the second recovered from the determinant to avoid cancellation.
fn eig2x2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let mid = (a + d) * 0.5;
    let det = a * d - b * c;
    let q = ((a - d) * (a - d) * 0.25 + b * c).sqrt();
    let l1 = if (mid + q).norm() >= (mid - q).norm() {
        mid + q
    } else {
        mid - q
    };
    if l1.norm() == 0.0 {
        (l1, mid - (l1 - mid))
    } else {
        (l1, det / l1)
    }
}

/// Implicit single-shift QR with Wilkinson shifts on an upper Hessenberg
/// matrix. Consumes `h`; returns all eigenvalues or a solver failure carrying
/// the part of the spectrum that did deflate.
fn qr_eigenvalues(h: &mut ComplexMatrix) -> Result<Vec<Complex64>> {
    let n = h.nrows();
    let mut eigs: Vec<Complex64> = Vec::with_capacity(n);
    let hnorm = h.inf_norm().max(f64::MIN_POSITIVE);
    let budget = tol::QR_SWEEPS_PER_EIGENVALUE * n.max(3);
    let mut sweeps_total = 0usize;
    let mut hi = n - 1;
    let mut sweeps_here = 0usize;

    'deflate: loop {
        // Scan upward for a negligible subdiagonal entry bounding the block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let local = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let thresh = if local > 0.0 {
                EPS * local
            } else {
                EPS * hnorm
            };
            if sub <= thresh {
                h[(lo, lo - 1)] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }

        if lo == hi {
            eigs.push(h[(hi, hi)]);
            sweeps_here = 0;
            if hi == 0 {
                break 'deflate;
            }
            hi -= 1;
            continue;
        }
        if lo + 1 == hi {
            let (l1, l2) = eig2x2(h[(lo, lo)], h[(lo, hi)], h[(hi, lo)], h[(hi, hi)]);
            eigs.push(l1);
            eigs.push(l2);
            sweeps_here = 0;
            if lo == 0 {
                break 'deflate;
            }
            hi = lo - 1;
            continue;
        }

        sweeps_total += 1;
        sweeps_here += 1;
        if sweeps_total > budget {
            return Err(Error::SolverFailure {
                budget,
                total: n,
                partial: eigs,
            });
        }

        let shift = if sweeps_here.is_multiple_of(10) {
            // Exceptional shift to break rare symmetric stalls.
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            let (l1, l2) = eig2x2(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            );
            let target = h[(hi, hi)];
            if (l1 - target).norm() <= (l2 - target).norm() {
                l1
            } else {
                l2
            }
        };

        // Bulge chase over the active block.
        let mut x = h[(lo, lo)] - shift;
        let mut y = h[(lo + 1, lo)];
        for i in lo..hi {
            let (c, s) = givens(x, y);
            let col_start = if i > lo { i - 1 } else { lo };
            for col in col_start..n {
                let t1 = h[(i, col)];
                let t2 = h[(i + 1, col)];
                h[(i, col)] = c * t1 + s * t2;
                h[(i + 1, col)] = -s.conj() * t1 + c * t2;
            }
            let row_end = (i + 2).min(hi);
            for row in 0..=row_end {
                let t1 = h[(row, i)];
                let t2 = h[(row, i + 1)];
                h[(row, i)] = c * t1 + s.conj() * t2;
                h[(row, i + 1)] = -s * t1 + c * t2;
            }
            if i + 2 <= hi {
                x = h[(i + 1, i)];
                y = h[(i + 2, i)];
            }
        }
    }

    debug_assert_eq!(eigs.len(), n);
    Ok(eigs)
}

/// Backward-style residual for one computed eigenvalue: recover an
/// eigenvector by inverse iteration on the (near-singular) shifted matrix
/// and report `||Av - lv||_2` for the unit vector `v`.
fn eigenvalue_residual(a: &ComplexMatrix, lambda: Complex64) -> f64 {
    let n = a.nrows();
    let mut shifted = a.clone();
    for i in 0..n {
        shifted[(i, i)] -= lambda;
    }
    let scale = a.max_abs().max(lambda.norm()).max(f64::MIN_POSITIVE);
    let floor = EPS * scale * n as f64;
    let lu = lu::factor(&shifted);

    let mut v: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0, 0.3 + (i as f64) * 0.7))
        .collect();
    normalize(&mut v);
    let mut best = f64::INFINITY;
    for _ in 0..4 {
        let mut w = lu.solve_floored(&v, floor);
        let wn = vec_norm(&w);
        if !wn.is_finite() || wn == 0.0 {
            break;
        }
        for z in &mut w {
            *z /= wn;
        }
        v = w;
        let av = a.matvec(&v);
        let r: f64 = av
            .iter()
            .zip(&v)
            .map(|(&awi, &vi)| (awi - lambda * vi).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if r < best {
            best = r;
        }
        if best <= EPS * scale * 4.0 {
            break;
        }
    }
    best
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(v: &mut [Complex64]) {
    let n = vec_norm(v);
    if n > 0.0 {
        for z in v.iter_mut() {
            *z /= n;
        }
    }
}
