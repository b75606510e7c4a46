//! Constructors and validators for the structured coefficient families: the
//! doubly stochastic family (permutation end coefficients), the commuting
//! Schur-stable family, and the explicit witness polynomials that approach
//! each localization bound.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matpoly::MatrixPolynomial;
use crate::numerics::{self, haar_unitary, ComplexMatrix};

/// Coefficient family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Doubly stochastic coefficients with permutation ends.
    Ds,
    /// Monic with commuting coefficients of spectral radius below `r`.
    Schur,
}

/// Parameters of a random verification campaign.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    /// Spectral-radius bound; required for [`Family::Schur`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    pub trials: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 || self.m < 1 {
            return Err(Error::Domain(format!(
                "ensemble needs n >= 1 and m >= 1, got n = {}, m = {}",
                self.n, self.m
            )));
        }
        if self.family == Family::Schur && !self.r.is_some_and(|r| r > 0.0) {
            return Err(Error::Domain("the Schur family needs r > 0".into()));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Doubly stochastic family
// ---------------------------------------------------------------------------

/// Random permutation matrix from a seeded uniform shuffle.
pub fn random_permutation(n: usize, seed: u64) -> ComplexMatrix {
    permutation_from(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn permutation_from(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    let mut p = ComplexMatrix::zeros(n, n);
    for (i, &j) in image.iter().enumerate() {
        p[(i, j)] = Complex64::new(1.0, 0.0);
    }
    p
}

/// Convex combination of permutation matrices with the given positive
/// weights; the weights are normalized to sum to one.
pub fn birkhoff_combination(perms: &[ComplexMatrix], weights: &[f64]) -> ComplexMatrix {
    assert_eq!(perms.len(), weights.len());
    assert!(!perms.is_empty());
    let total: f64 = weights.iter().sum();
    let n = perms[0].nrows();
    let mut a = ComplexMatrix::zeros(n, n);
    for (p, &w) in perms.iter().zip(weights) {
        a = &a + &p.scale(Complex64::new(w / total, 0.0));
    }
    a
}

/// Random doubly stochastic matrix: `k` seeded permutations combined with
/// Dirichlet-uniform weights.
pub fn random_doubly_stochastic(n: usize, k: usize, seed: u64) -> ComplexMatrix {
    doubly_stochastic_from(n, k, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn doubly_stochastic_from(n: usize, k: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    assert!(k >= 1, "need at least one Birkhoff term");
    let perms: Vec<ComplexMatrix> = (0..k).map(|_| permutation_from(n, rng)).collect();
    // Normalized unit exponentials are uniform on the simplex.
    let weights: Vec<f64> = (0..k).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    birkhoff_combination(&perms, &weights)
}

/// Default number of Birkhoff terms for an `n x n` coefficient.
pub fn default_birkhoff_terms(n: usize) -> usize {
    (n * n).max(1)
}

/// Random member of the doubly stochastic family: permutation end
/// coefficients, doubly stochastic interior ones.
pub fn random_d_polynomial(n: usize, m: usize, k: usize, seed: u64) -> MatrixPolynomial {
    assert!(m >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = Vec::with_capacity(m + 1);
    coeffs.push(permutation_from(n, &mut rng));
    for _ in 1..m {
        coeffs.push(doubly_stochastic_from(n, k, &mut rng));
    }
    coeffs.push(permutation_from(n, &mut rng));
    MatrixPolynomial::new(coeffs).expect("constructed coefficients are valid")
}

/// Random polynomial with *all* coefficients doubly stochastic (no
/// permutation requirement on the ends). The unit-circle guarantee only
/// assumes this weaker hypothesis, and such instances may carry a singular
/// leading coefficient.
pub fn random_ds_polynomial(n: usize, m: usize, k: usize, seed: u64) -> MatrixPolynomial {
    assert!(m >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..=m)
        .map(|_| doubly_stochastic_from(n, k, &mut rng))
        .collect();
    MatrixPolynomial::new(coeffs).expect("constructed coefficients are valid")
}

/// The singular doubly stochastic matrix with every entry `1/n`; useful for
/// exercising singular-leading-coefficient paths.
pub fn uniform_doubly_stochastic(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| Complex64::new(1.0 / n as f64, 0.0))
}

fn ds_violation(a: &ComplexMatrix, tolerance: f64) -> Option<String> {
    let n = a.nrows();
    if !a.is_square() {
        return Some(format!(
            "coefficient is {}x{}, not square",
            a.nrows(),
            a.ncols()
        ));
    }
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            if z.im.abs() > tolerance {
                return Some(format!("entry ({i},{j}) has imaginary part {:.3e}", z.im));
            }
            if z.re < -tolerance {
                return Some(format!("entry ({i},{j}) is negative: {:.3e}", z.re));
            }
        }
    }
    for i in 0..n {
        let row: f64 = (0..n).map(|j| a[(i, j)].re).sum();
        if (row - 1.0).abs() > tolerance {
            return Some(format!("row {i} sums to {row:.12}, expected 1"));
        }
        let col: f64 = (0..n).map(|j| a[(j, i)].re).sum();
        if (col - 1.0).abs() > tolerance {
            return Some(format!("column {i} sums to {col:.12}, expected 1"));
        }
    }
    None
}

/// Permutation pattern check by thresholding entries at 1/2.
fn permutation_violation(a: &ComplexMatrix, tolerance: f64) -> Option<String> {
    if let Some(v) = ds_violation(a, tolerance) {
        return Some(v);
    }
    let n = a.nrows();
    let mut col_hits = vec![0usize; n];
    for i in 0..n {
        let mut row_hits = 0usize;
        for j in 0..n {
            let x = a[(i, j)].re;
            if x >= 0.5 {
                if (x - 1.0).abs() > tolerance {
                    return Some(format!("entry ({i},{j}) = {x:.12} is not 0 or 1"));
                }
                row_hits += 1;
                col_hits[j] += 1;
            } else if x.abs() > tolerance {
                return Some(format!("entry ({i},{j}) = {x:.12} is not 0 or 1"));
            }
        }
        if row_hits != 1 {
            return Some(format!(
                "row {i} has {row_hits} unit entries, expected exactly 1"
            ));
        }
    }
    if let Some(j) = col_hits.iter().position(|&h| h != 1) {
        return Some(format!(
            "column {j} has {} unit entries, expected exactly 1",
            col_hits[j]
        ));
    }
    None
}

/// Family membership with a reason on failure: every coefficient doubly
/// stochastic, and the end coefficients permutation matrices.
pub fn validate_d_detail(p: &MatrixPolynomial, tolerance: f64) -> std::result::Result<(), String> {
    for (k, a) in p.coeffs().iter().enumerate() {
        if let Some(v) = ds_violation(a, tolerance) {
            return Err(format!("coefficient {k}: {v}"));
        }
    }
    if let Some(v) = permutation_violation(p.constant(), tolerance) {
        return Err(format!("constant coefficient is not a permutation: {v}"));
    }
    if let Some(v) = permutation_violation(p.leading(), tolerance) {
        return Err(format!("leading coefficient is not a permutation: {v}"));
    }
    Ok(())
}

pub fn validate_d(p: &MatrixPolynomial, tolerance: f64) -> bool {
    validate_d_detail(p, tolerance).is_ok()
}

/// Doubly-stochastic-only hypothesis (unit-circle theorem), with a reason.
pub fn validate_ds_only_detail(
    p: &MatrixPolynomial,
    tolerance: f64,
) -> std::result::Result<(), String> {
    for (k, a) in p.coeffs().iter().enumerate() {
        if let Some(v) = ds_violation(a, tolerance) {
            return Err(format!("coefficient {k}: {v}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Commuting Schur-stable family
// ---------------------------------------------------------------------------

/// Named predicate that failed during [`validate_sr_detail`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrPredicate {
    Monicity,
    Commutativity,
    SpectralRadius,
}

impl SrPredicate {
    pub fn name(self) -> &'static str {
        match self {
            SrPredicate::Monicity => "monicity",
            SrPredicate::Commutativity => "commutativity",
            SrPredicate::SpectralRadius => "spectral radius",
        }
    }
}

/// Random monic polynomial with commuting coefficients of spectral radius
/// below `0.95 r`.
///
/// A family of independent random triangular matrices would not commute, so
/// the coefficients are built as `A_i = U T_i U*` with `T_i = S D_i S^{-1}`:
/// one Haar unitary `U` and one well-conditioned unit upper-triangular `S`
/// shared across the family, and independent diagonals `D_i` drawn from the
/// disc of radius `0.95 r`. Each `T_i` is upper triangular with diagonal
/// `D_i`, all pairwise commutators vanish identically, and the off-diagonal
/// entries stay below `r` because `S` is kept near the identity.
pub fn random_commuting_sr(n: usize, m: usize, r: f64, seed: u64) -> MatrixPolynomial {
    assert!(r > 0.0 && m >= 1 && n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = haar_unitary(n, rng.gen());

    // Unit upper-triangular S = I + N with ||N||_inf <= 1/4, which bounds the
    // off-diagonal part of S D S^{-1} by 2(1/4)(0.95 r)/(1 - 1/4) < r.
    let entry_radius = if n > 1 { 0.25 / (n - 1) as f64 } else { 0.0 };
    let mut s = ComplexMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            s[(i, j)] = disc_sample(&mut rng, entry_radius);
        }
    }

    let ut = u.conj_transpose();
    let mut coeffs = Vec::with_capacity(m + 1);
    for _ in 0..m {
        let diag: Vec<Complex64> = (0..n).map(|_| disc_sample(&mut rng, 0.95 * r)).collect();
        let t = conjugate_diagonal_by_unit_upper(&s, &diag);
        coeffs.push(&(&u * &t) * &ut);
    }
    coeffs.push(ComplexMatrix::identity(n));
    MatrixPolynomial::new(coeffs).expect("constructed coefficients are valid")
}

/// Uniform sample from the closed complex disc of the given radius.
fn disc_sample(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let angle = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
    let rad = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(rad, angle)
}

/// `T = S diag(d) S^{-1}` for unit upper-triangular `S`, computed by forward
/// substitution on columns; the result is exactly upper triangular with
/// diagonal `d`.
fn conjugate_diagonal_by_unit_upper(s: &ComplexMatrix, diag: &[Complex64]) -> ComplexMatrix {
    let n = diag.len();
    // M = S * diag(d): scale column j of S by d_j.
    let mut msd = s.clone();
    for j in 0..n {
        for i in 0..n {
            msd[(i, j)] *= diag[j];
        }
    }
    // Solve T S = M column by column (S unit upper triangular).
    let mut t = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        for i in 0..n {
            let mut acc = msd[(i, j)];
            for k in 0..j {
                acc -= t[(i, k)] * s[(k, j)];
            }
            t[(i, j)] = acc;
        }
    }
    t
}

/// Family membership for the commuting Schur-stable family, naming the first
/// failed predicate: monicity, spectral radius below `r`, or commutativity.
pub fn validate_sr_detail(
    p: &MatrixPolynomial,
    r: f64,
    tolerance: f64,
) -> std::result::Result<(), (SrPredicate, String)> {
    assert!(r > 0.0);
    let n = p.size();
    let m = p.degree();
    let identity = ComplexMatrix::identity(n);
    let defect = (p.leading() - &identity).max_abs();
    if defect > tolerance {
        return Err((
            SrPredicate::Monicity,
            format!("leading coefficient differs from I by {defect:.3e}"),
        ));
    }
    for (i, a) in p.coeffs()[..m].iter().enumerate() {
        let rho = numerics::spectral_radius(a)
            .map_err(|e| (SrPredicate::SpectralRadius, format!("coefficient {i}: {e}")))?;
        if rho >= r {
            return Err((
                SrPredicate::SpectralRadius,
                format!("coefficient {i} has spectral radius {rho:.6} >= {r}"),
            ));
        }
    }
    let scale = p.coeffs()[..m]
        .iter()
        .map(|a| numerics::spectral_norm(a).expect("square"))
        .fold(0.0, f64::max)
        .powi(2);
    for i in 0..m {
        for j in i + 1..m {
            let ab = &(p.coeff(i) * p.coeff(j)) - &(p.coeff(j) * p.coeff(i));
            let norm = numerics::spectral_norm(&ab).expect("square");
            if norm > tolerance * scale {
                return Err((
                    SrPredicate::Commutativity,
                    format!(
                        "coefficients {i} and {j} have commutator norm {norm:.3e} \
                         (allowed {:.3e})",
                        tolerance * scale
                    ),
                ));
            }
        }
    }
    Ok(())
}

pub fn validate_sr(p: &MatrixPolynomial, r: f64, tolerance: f64) -> bool {
    validate_sr_detail(p, r, tolerance).is_ok()
}

// ---------------------------------------------------------------------------
// Witness polynomials
// ---------------------------------------------------------------------------

fn swap2() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

/// Witness approaching the inner annulus radius: the smallest `d` with
/// `r + r^2 + ... + r^d > 1` and the polynomial
/// `I z^d + ... + I z + I'` over 2x2 blocks, whose determinant carries the
/// factor `z^d + ... + z - 1` with a real root in `(1/2, r)`.
pub fn extremal_inf_witness(r: f64) -> Result<(MatrixPolynomial, usize)> {
    if !(r > 0.5 && r < 1.0) {
        return Err(Error::Domain(format!(
            "inf witness needs 1/2 < r < 1, got {r}"
        )));
    }
    let mut partial = 0.0;
    let mut d = 0usize;
    while partial <= 1.0 {
        d += 1;
        partial += r.powi(d as i32);
        if d > 1000 {
            return Err(Error::Domain(format!("r = {r} is too close to 1/2")));
        }
    }
    let mut coeffs = Vec::with_capacity(d + 1);
    coeffs.push(swap2());
    for _ in 0..d {
        coeffs.push(ComplexMatrix::identity(2));
    }
    Ok((MatrixPolynomial::new(coeffs)?, d))
}

/// Witness approaching the outer annulus radius:
/// `I z^m + I' z^{m-1} + ... + I' z + I'`, whose determinant carries the
/// factor `z^m - z^{m-1} - ... - z - 1` with its real root climbing to 2.
pub fn extremal_sup_witness(m: usize) -> MatrixPolynomial {
    assert!(m >= 1);
    let mut coeffs = Vec::with_capacity(m + 1);
    for _ in 0..m {
        coeffs.push(swap2());
    }
    coeffs.push(ComplexMatrix::identity(2));
    MatrixPolynomial::new(coeffs).expect("witness coefficients are valid")
}

/// Witness approaching the Schur-family bound `r + 1`:
/// `I z^m + A(z^{m-1} + ... + 1)` with `A = -(r - 1/n_param) I` over 2x2
/// blocks; its determinant is the square of
/// `z^m - (r - 1/n_param)(z^{m-1} + ... + 1)`.
pub fn schur_sup_witness(m: usize, n_param: usize, r: f64) -> Result<MatrixPolynomial> {
    if n_param == 0 || r < 1.0 / n_param as f64 {
        return Err(Error::Domain(format!(
            "sup witness needs r >= 1/n_param, got r = {r}, n_param = {n_param}"
        )));
    }
    assert!(m >= 1);
    let a = ComplexMatrix::identity(2).scale(Complex64::new(-(r - 1.0 / n_param as f64), 0.0));
    let mut coeffs = Vec::with_capacity(m + 1);
    for _ in 0..m {
        coeffs.push(a.clone());
    }
    coeffs.push(ComplexMatrix::identity(2));
    MatrixPolynomial::new(coeffs)
}

/// Quadratic with non-commuting nilpotent coefficients whose companion has
/// characteristic polynomial `z (z^3 - n^2)`: eigenvalue moduli grow like
/// `n^(2/3)`, so dropping commutativity makes the family unbounded.
pub fn noncommuting_counterexample(n_param: usize) -> MatrixPolynomial {
    assert!(n_param >= 1);
    let n = n_param as f64;
    let a1 = ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[-n, 0.0]]);
    let a0 = ComplexMatrix::from_real_rows(&[&[0.0, -n], &[0.0, 0.0]]);
    MatrixPolynomial::new(vec![a0, a1, ComplexMatrix::identity(2)])
        .expect("witness coefficients are valid")
}

/// Linearly damped mass-spring chain `I z^2 + 10 T z + 5 T` with
/// `T = tridiag(-1, 3, -1)` of order `size`. Both non-leading coefficients
/// are multiples of `T`, so they commute exactly.
pub fn mass_spring(size: usize) -> MatrixPolynomial {
    assert!(size >= 1);
    let t = ComplexMatrix::from_fn(size, size, |i, j| {
        if i == j {
            Complex64::new(3.0, 0.0)
        } else if i.abs_diff(j) == 1 {
            Complex64::new(-1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    MatrixPolynomial::new(vec![
        t.scale(Complex64::new(5.0, 0.0)),
        t.scale(Complex64::new(10.0, 0.0)),
        ComplexMatrix::identity(size),
    ])
    .expect("coefficients are valid")
}
