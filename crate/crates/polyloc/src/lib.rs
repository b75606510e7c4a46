//! Eigenvalues of matrix polynomials `P(z) = sum A_i z^i` via block companion
//! linearization, together with checked localization bounds:
//!
//! - doubly stochastic coefficients with permutation ends keep every
//!   eigenvalue modulus inside the annulus `(1/2, 2)`, and the bounds are
//!   sharp along explicit witness sequences;
//! - any polynomial with doubly stochastic coefficients picks up the `m`
//!   roots of `z^m + ... + z + 1` as eigenvalues on the unit circle;
//! - monic polynomials with commuting coefficients of spectral radius below
//!   `r` keep every eigenvalue modulus below `r + 1`, which fails without
//!   commutativity.
//!
//! ```
//! use polyloc::ensembles::extremal_sup_witness;
//!
//! let witness = extremal_sup_witness(2);
//! let spectrum = witness.polyeig().unwrap();
//! let phi = (5f64.sqrt() + 1.0) / 2.0;
//! assert!((spectrum.max_modulus() - phi).abs() < 1e-8);
//! ```

pub mod ensembles;
pub mod error;
pub mod matpoly;
pub mod numerics;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
pub use matpoly::{MatrixPolynomial, ScalarPolynomial};
pub use numerics::{ComplexMatrix, Spectrum};
