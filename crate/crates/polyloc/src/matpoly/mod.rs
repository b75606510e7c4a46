//! Matrix polynomials and their canonical transformations: evaluation,
//! reversal, monic reduction, block companion linearization, polynomial
//! eigenvalues, and determinant-polynomial extraction.

mod io;
mod scalar;

pub use io::{from_json_str, load_file, save_file, to_json_string};
pub use scalar::ScalarPolynomial;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{self, ComplexMatrix, Spectrum};
use crate::tol;

/// `P(z) = sum A_i z^i` with square coefficients of equal size and a nonzero
/// leading coefficient. Coefficients are stored by ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPolynomial {
    coeffs: Vec<ComplexMatrix>,
}

impl MatrixPolynomial {
    /// Validates sizes, trims trailing exactly-zero coefficient matrices, and
    /// rejects the zero polynomial.
    pub fn new(mut coeffs: Vec<ComplexMatrix>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Degree(
                "a polynomial needs at least one coefficient".into(),
            ));
        }
        let n = coeffs[0].nrows();
        for (k, a) in coeffs.iter().enumerate() {
            if !a.is_square() || a.nrows() != n {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient {k} is {}x{}, expected {n}x{n}",
                    a.nrows(),
                    a.ncols()
                )));
            }
            if a.nrows() == 0 {
                return Err(Error::EmptyMatrix);
            }
            if !a.all_finite() {
                return Err(Error::Parse(format!(
                    "coefficient {k} has a non-finite entry"
                )));
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(ComplexMatrix::is_zero) {
            coeffs.pop();
        }
        if coeffs.last().is_some_and(ComplexMatrix::is_zero) {
            return Err(Error::Degree(
                "the zero polynomial is not representable".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Coefficient size `n`.
    pub fn size(&self) -> usize {
        self.coeffs[0].nrows()
    }

    /// Degree `m`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ComplexMatrix] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &ComplexMatrix {
        &self.coeffs[i]
    }

    pub fn leading(&self) -> &ComplexMatrix {
        self.coeffs.last().unwrap()
    }

    pub fn constant(&self) -> &ComplexMatrix {
        &self.coeffs[0]
    }

    /// Horner evaluation over matrix coefficients.
    pub fn evaluate(&self, z: Complex64) -> ComplexMatrix {
        let mut acc = self.leading().clone();
        for a in self.coeffs.iter().rev().skip(1) {
            acc = &acc.scale(z) + a;
        }
        acc
    }

    /// Reverse polynomial `z^m P(1/z)`: coefficient order flipped, degree
    /// re-trimmed when the original constant term was zero.
    pub fn reverse(&self) -> Result<Self> {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Largest coefficient spectral norm; the natural scale for eigenvalue
    /// residuals.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|a| numerics::spectral_norm(a).expect("coefficients are square"))
            .fold(0.0, f64::max)
    }

    /// Backward-error scale at the point `z`:
    /// `max_i ||A_i||_2 * max(1, |z|)^m`.
    pub fn residual_scale(&self, z: Complex64) -> f64 {
        self.max_coeff_norm() * z.norm().max(1.0).powi(self.degree() as i32)
    }

    /// `sigma_min(P(z))` thresholded against [`residual_scale`]: the
    /// numerical version of `det P(z) = 0`.
    ///
    /// [`residual_scale`]: Self::residual_scale
    pub fn is_eigenvalue(&self, z: Complex64, tolerance: f64) -> bool {
        assert!(tolerance > 0.0, "tolerance must be positive");
        let smin = numerics::sigma_min(&self.evaluate(z)).expect("evaluation is square");
        smin <= tolerance * self.residual_scale(z)
    }

    /// Monic reduction `U_i = A_m^{-1} A_i`, leading coefficient exactly the
    /// identity. Fails when the leading coefficient is numerically singular.
    pub fn monic_reduce(&self) -> Result<Self> {
        let n = self.size();
        let lead = self.leading();
        if *lead == ComplexMatrix::identity(n) {
            return Ok(self.clone());
        }
        let smin = numerics::sigma_min(lead)?;
        let threshold = tol::SINGULARITY * numerics::spectral_norm(lead)?;
        if smin <= threshold {
            return Err(Error::SingularLeading {
                sigma_min: smin,
                threshold,
            });
        }
        let lu = numerics::lu_factor(lead);
        let m = self.degree();
        let mut reduced = Vec::with_capacity(m + 1);
        for a in &self.coeffs[..m] {
            let mut u = ComplexMatrix::zeros(n, n);
            for col in 0..n {
                let rhs: Vec<Complex64> = (0..n).map(|row| a[(row, col)]).collect();
                let x = lu.solve_floored(&rhs, 0.0);
                for row in 0..n {
                    u[(row, col)] = x[row];
                }
            }
            reduced.push(u);
        }
        reduced.push(ComplexMatrix::identity(n));
        Self::new(reduced)
    }

    /// Block companion matrix of the monic reduction: identity blocks on the
    /// superdiagonal and `(-U_0, ..., -U_{m-1})` in the last block row.
    pub fn companion(&self) -> Result<ComplexMatrix> {
        let m = self.degree();
        if m == 0 {
            return Err(Error::Degree("companion form needs degree >= 1".into()));
        }
        let monic = self.monic_reduce()?;
        let n = monic.size();
        let order = m * n;
        let mut c = ComplexMatrix::zeros(order, order);
        for b in 0..m.saturating_sub(1) {
            for i in 0..n {
                c[(b * n + i, (b + 1) * n + i)] = Complex64::new(1.0, 0.0);
            }
        }
        for (b, u) in monic.coeffs[..m].iter().enumerate() {
            let neg = -u;
            c.set_block((m - 1) * n, b * n, &neg);
        }
        Ok(c)
    }

    /// All `m*n` finite polynomial eigenvalues via the companion matrix.
    /// Residuals are normalized backward errors
    /// `sigma_min(P(l)) / residual_scale(l)`.
    pub fn polyeig(&self) -> Result<Spectrum> {
        let comp = self.companion()?;
        let spectrum = numerics::eigenvalues_dense(&comp)?;
        let scale_norm = self.max_coeff_norm();
        let m = self.degree() as i32;
        let residuals = spectrum
            .eigenvalues()
            .iter()
            .map(|&l| {
                let smin = numerics::sigma_min(&self.evaluate(l)).expect("square");
                smin / (scale_norm * l.norm().max(1.0).powi(m))
            })
            .collect();
        Ok(Spectrum::new(spectrum.eigenvalues().to_vec(), residuals))
    }

    /// The scalar polynomial `det P(z)`, recovered by evaluating the
    /// determinant at `m*n + 1` scaled roots of unity and inverting the
    /// discrete Fourier system. Coefficients below
    /// [`tol::DET_POLY_SNAP`](crate::tol) of the largest are
    /// snapped to zero.
    pub fn det_poly(&self) -> ScalarPolynomial {
        self.det_poly_with_radius(1.0)
    }

    /// [`det_poly`](Self::det_poly) with a configurable node radius for badly
    /// scaled problems.
    pub fn det_poly_with_radius(&self, radius: f64) -> ScalarPolynomial {
        assert!(radius > 0.0, "node radius must be positive");
        let n = self.size();
        let m = self.degree();
        let count = m * n + 1;
        let tau = 2.0 * std::f64::consts::PI / count as f64;
        let dets: Vec<Complex64> = (0..count)
            .map(|j| {
                let node = Complex64::from_polar(radius, tau * j as f64);
                numerics::det(&self.evaluate(node)).expect("square")
            })
            .collect();
        let mut coeffs = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &d) in dets.iter().enumerate() {
                acc += d * Complex64::from_polar(1.0, -tau * (j * k % count) as f64);
            }
            coeffs.push(acc / (count as f64 * radius.powi(k as i32)));
        }
        let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cut = tol::DET_POLY_SNAP * max;
        for c in &mut coeffs {
            if c.re.abs() <= cut {
                c.re = 0.0;
            }
            if c.im.abs() <= cut {
                c.im = 0.0;
            }
        }
        ScalarPolynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ident(n: usize) -> ComplexMatrix {
        ComplexMatrix::identity(n)
    }

    fn swap2() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    /// I z^2 + I' z + I'
    fn q2() -> MatrixPolynomial {
        MatrixPolynomial::new(vec![swap2(), swap2(), ident(2)]).unwrap()
    }

    #[test]
    fn evaluate_constant_and_sum() {
        let p = MatrixPolynomial::new(vec![swap2(), ident(2)]).unwrap();
        assert_eq!(p.evaluate(c(0.0, 0.0)), swap2());
        let ones = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(p.evaluate(c(1.0, 0.0)), ones);
    }

    #[test]
    fn row_sum_null_vector_at_cube_root() {
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let pv = q2().evaluate(omega).matvec(&[c(1.0, 0.0), c(1.0, 0.0)]);
        let norm: f64 = pv.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm < 1e-12);
    }

    #[test]
    fn reverse_is_involutive_and_trims() {
        let p = q2();
        assert_eq!(p.reverse().unwrap().reverse().unwrap(), p);
        // I z has zero constant term: the reverse trims to degree 0.
        let iz = MatrixPolynomial::new(vec![ComplexMatrix::zeros(2, 2), ident(2)]).unwrap();
        let rev = iz.reverse().unwrap();
        assert_eq!(rev.degree(), 0);
        assert_eq!(*rev.constant(), ident(2));
    }

    #[test]
    fn monic_reduce_cases() {
        let p = q2();
        assert_eq!(p.monic_reduce().unwrap(), p);

        // Leading I': U_i = I' A_i.
        let p2 = MatrixPolynomial::new(vec![ident(2), swap2()]).unwrap();
        let reduced = p2.monic_reduce().unwrap();
        assert_eq!(*reduced.leading(), ident(2));
        let expected = &swap2() * &ident(2);
        for i in 0..2 {
            for j in 0..2 {
                assert!((reduced.coeff(0)[(i, j)] - expected[(i, j)]).norm() < 1e-14);
            }
        }

        let rank1 = ComplexMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]);
        let bad = MatrixPolynomial::new(vec![ident(2), rank1]).unwrap();
        assert!(matches!(
            bad.monic_reduce(),
            Err(Error::SingularLeading { .. })
        ));
    }

    #[test]
    fn companion_layout() {
        // Degree 1: companion is -A_0.
        let p = MatrixPolynomial::new(vec![swap2(), ident(2)]).unwrap();
        let comp = p.companion().unwrap();
        assert_eq!(comp, -&swap2());

        // Scalar quadratic z^2 + a z + b.
        let (a, b) = (c(3.0, 0.0), c(-2.0, 0.0));
        let scalar = MatrixPolynomial::new(vec![
            ComplexMatrix::from_fn(1, 1, |_, _| b),
            ComplexMatrix::from_fn(1, 1, |_, _| a),
            ident(1),
        ])
        .unwrap();
        let comp = scalar.companion().unwrap();
        assert_eq!(comp[(0, 0)], c(0.0, 0.0));
        assert_eq!(comp[(0, 1)], c(1.0, 0.0));
        assert_eq!(comp[(1, 0)], -b);
        assert_eq!(comp[(1, 1)], -a);

        // m = 2, n = 2 block layout.
        let comp = q2().companion().unwrap();
        assert_eq!(comp.nrows(), 4);
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
                assert_eq!(comp[(i, 2 + j)], expected);
                assert_eq!(comp[(i, j)], c(0.0, 0.0));
                assert_eq!(comp[(2 + i, j)], -swap2()[(i, j)]);
                assert_eq!(comp[(2 + i, 2 + j)], -swap2()[(i, j)]);
            }
        }

        let constant = MatrixPolynomial::new(vec![ident(2)]).unwrap();
        assert!(matches!(constant.companion(), Err(Error::Degree(_))));
    }

    #[test]
    fn polyeig_moduli_of_q2() {
        let s = q2().polyeig().unwrap();
        assert_eq!(s.count(), 4);
        let mut moduli = s.moduli();
        moduli.sort_by(f64::total_cmp);
        let phi = (5f64.sqrt() + 1.0) / 2.0;
        assert!((moduli[0] - (phi - 1.0)).abs() < 1e-8);
        assert!((moduli[1] - 1.0).abs() < 1e-8);
        assert!((moduli[2] - 1.0).abs() < 1e-8);
        assert!((moduli[3] - phi).abs() < 1e-8);
        for &r in s.residuals() {
            assert!(r <= tol::POLYEIG_RESIDUAL);
        }
    }

    #[test]
    fn polyeig_linear_case_matches_negated_constant() {
        let p = MatrixPolynomial::new(vec![swap2(), ident(2)]).unwrap();
        let s = p.polyeig().unwrap();
        let mut re: Vec<f64> = s.eigenvalues().iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 1.0).abs() < 1e-10);
        assert!((re[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn det_poly_known_expansions() {
        // Q2: z^4 - z^2 - 2z - 1.
        let d = q2().det_poly();
        let want = [-1.0, -2.0, -1.0, 0.0, 1.0];
        assert_eq!(d.degree(), 4);
        for (k, &w) in want.iter().enumerate() {
            assert!((d.coeffs()[k] - c(w, 0.0)).norm() < 1e-10, "coeff {k}");
        }

        // (z + 1)^2 for I z + I at n = 2.
        let p = MatrixPolynomial::new(vec![ident(2), ident(2)]).unwrap();
        let d = p.det_poly();
        let want = [1.0, 2.0, 1.0];
        for (k, &w) in want.iter().enumerate() {
            assert!((d.coeffs()[k] - c(w, 0.0)).norm() < 1e-10);
        }

        // I z^2 + I z + I': z^4 + 2z^3 + z^2 - 1.
        let p = MatrixPolynomial::new(vec![swap2(), ident(2), ident(2)]).unwrap();
        let d = p.det_poly();
        let want = [-1.0, 0.0, 1.0, 2.0, 1.0];
        for (k, &w) in want.iter().enumerate() {
            assert!((d.coeffs()[k] - c(w, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn det_poly_radius_handles_scaled_roots() {
        // Scalar (z + 100)^4: coefficients spread over eight orders of
        // magnitude. Sampling on the circle of radius 100 balances the
        // nodes so every coefficient is recovered to full precision.
        let want = [1e8, 4e6, 6e4, 4e2, 1.0];
        let coeffs: Vec<ComplexMatrix> = want
            .iter()
            .map(|&w| ComplexMatrix::from_fn(1, 1, |_, _| c(w, 0.0)))
            .collect();
        let p = MatrixPolynomial::new(coeffs).unwrap();
        let d = p.det_poly_with_radius(100.0);
        assert_eq!(d.degree(), 4);
        for (k, &w) in want.iter().enumerate() {
            let err = (d.coeffs()[k] - c(w, 0.0)).norm() / w;
            assert!(err <= 1e-12, "coeff {k}: relative error {err:.3e}");
        }
    }

    #[test]
    fn is_eigenvalue_examples() {
        let minus_i = MatrixPolynomial::new(vec![ident(2).scale(c(-1.0, 0.0)), ident(2)]).unwrap();
        assert!(minus_i.is_eigenvalue(c(1.0, 0.0), 1e-8));

        let iz = MatrixPolynomial::new(vec![ComplexMatrix::zeros(2, 2), ident(2)]).unwrap();
        assert!(!iz.is_eigenvalue(c(1.0, 0.0), 1e-6));
    }

    #[test]
    fn golden_root_shows_up_in_mixed_polynomial() {
        // I z^2 + I z + I' picks up the real root of z^2 + z - 1.
        let p = MatrixPolynomial::new(vec![swap2(), ident(2), ident(2)]).unwrap();
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        assert!(p.is_eigenvalue(c(phi, 0.0), 1e-7));
        let s = p.polyeig().unwrap();
        let hit = s
            .eigenvalues()
            .iter()
            .any(|z| (z - c(phi, 0.0)).norm() < 1e-8);
        assert!(hit);
    }
}
