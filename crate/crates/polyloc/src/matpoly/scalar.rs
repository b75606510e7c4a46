use num_complex::Complex64;

use crate::tol;

/// Scalar polynomial with complex coefficients stored by ascending degree.
/// Construction trims near-zero leading coefficients so the stored degree is
/// meaningful; the all-zero polynomial is kept as a single zero coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPolynomial {
    coeffs: Vec<Complex64>,
}

impl ScalarPolynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cut = tol::SCALAR_TRIM * max;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() <= cut) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    pub fn max_coeff_magnitude(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Long division by `divisor`; returns the quotient and the raw
    /// (untrimmed) remainder coefficients.
    pub fn div_rem(&self, divisor: &ScalarPolynomial) -> (ScalarPolynomial, Vec<Complex64>) {
        let dlead = divisor.leading();
        assert!(dlead.norm() > 0.0, "division by the zero polynomial");
        let ddeg = divisor.degree();
        if self.degree() < ddeg || self.is_zero() {
            return (
                ScalarPolynomial::new(vec![Complex64::new(0.0, 0.0)]),
                self.coeffs.clone(),
            );
        }
        let mut rem = self.coeffs.clone();
        let qdeg = self.degree() - ddeg;
        let mut quot = vec![Complex64::new(0.0, 0.0); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let factor = rem[k + ddeg] / dlead;
            quot[k] = factor;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let t = factor * dc;
                rem[k + j] -= t;
            }
        }
        rem.truncate(ddeg.max(1));
        (ScalarPolynomial::new(quot), rem)
    }
}
