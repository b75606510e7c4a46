//! Pivoted LU factorization: determinants, linear solves, and the
//! inverse-iteration backend for smallest-singular-value estimates.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;

/// Packed LU factors of a square matrix with partial pivoting,
/// `P A = L U` with unit lower-triangular `L`.
pub(crate) struct Lu {
    lu: ComplexMatrix,
    /// `perm[i]` is the source row of factored row `i`.
    perm: Vec<usize>,
    sign: f64,
    exactly_singular: bool,
}

pub(crate) fn factor(a: &ComplexMatrix) -> Lu {
    let n = a.nrows();
    debug_assert!(a.is_square());
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    let mut exactly_singular = false;

    for k in 0..n {
        let mut pivot_row = k;
        let mut pivot_mag = lu[(k, k)].norm();
        for i in k + 1..n {
            let mag = lu[(i, k)].norm();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = i;
            }
        }
        if pivot_mag == 0.0 {
            exactly_singular = true;
            continue;
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(pivot_row, j)];
                lu[(pivot_row, j)] = tmp;
            }
            perm.swap(k, pivot_row);
            sign = -sign;
        }
        let pivot = lu[(k, k)];
        for i in k + 1..n {
            let mult = lu[(i, k)] / pivot;
            lu[(i, k)] = mult;
            if mult.re == 0.0 && mult.im == 0.0 {
                continue;
            }
            for j in k + 1..n {
                let t = lu[(k, j)];
                lu[(i, j)] -= mult * t;
            }
        }
    }

    Lu {
        lu,
        perm,
        sign,
        exactly_singular,
    }
}

impl Lu {
    pub fn order(&self) -> usize {
        self.lu.nrows()
    }

    pub fn exactly_singular(&self) -> bool {
        self.exactly_singular
    }

    pub fn det(&self) -> Complex64 {
        if self.exactly_singular {
            return Complex64::new(0.0, 0.0);
        }
        let mut d = Complex64::new(self.sign, 0.0);
        for i in 0..self.order() {
            d *= self.lu[(i, i)];
        }
        d
    }

    /// Solve `A x = b`. Diagonal entries smaller than `floor` are replaced by
    /// `floor` during the back substitution, which keeps inverse iteration on
    /// (nearly) singular shifts well defined.
    pub fn solve_floored(&self, b: &[Complex64], floor: f64) -> Vec<Complex64> {
        let n = self.order();
        assert_eq!(b.len(), n);
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        // L y = P b
        for i in 0..n {
            for j in 0..i {
                let t = self.lu[(i, j)] * x[j];
                x[i] -= t;
            }
        }
        // U x = y
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = self.lu[(i, j)] * x[j];
                x[i] -= t;
            }
            x[i] /= self.diag_floored(i, floor);
        }
        x
    }

    /// Solve `A* x = b` using the same factors: `A* = U* L* P`.
    pub fn solve_adjoint_floored(&self, b: &[Complex64], floor: f64) -> Vec<Complex64> {
        let n = self.order();
        assert_eq!(b.len(), n);
        let mut y = b.to_vec();
        // U* y = b (forward, U* is lower triangular)
        for i in 0..n {
            for j in 0..i {
                let t = self.lu[(j, i)].conj() * y[j];
                y[i] -= t;
            }
            y[i] /= self.diag_floored(i, floor).conj();
        }
        // L* z = y (backward, unit diagonal)
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = self.lu[(j, i)].conj() * y[j];
                y[i] -= t;
            }
        }
        // x = P^T z
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        for (i, &p) in self.perm.iter().enumerate() {
            x[p] = y[i];
        }
        x
    }

    fn diag_floored(&self, i: usize, floor: f64) -> Complex64 {
        let d = self.lu[(i, i)];
        if d.norm() >= floor {
            d
        } else if d.re == 0.0 && d.im == 0.0 {
            Complex64::new(floor, 0.0)
        } else {
            d / d.norm() * floor
        }
    }
}
