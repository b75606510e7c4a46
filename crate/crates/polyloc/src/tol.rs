//! Centralized numerical tolerances.
//!
//! The localization theorems this crate checks are strict inequalities in
//! exact arithmetic; every floating-point test below pads the corresponding
//! bound instead of inventing ad-hoc constants at call sites.

/// Relative backward-error target for the dense eigensolver: each computed
/// eigenvalue `l` of `A` must satisfy `||Av - lv|| <= EIG_RESIDUAL * ||A||_2`
/// for the recovered eigenvector `v`.
pub const EIG_RESIDUAL: f64 = 1e-8;

/// QR sweeps allowed per matrix order before the solver gives up.
pub const QR_SWEEPS_PER_EIGENVALUE: usize = 30;

/// A square matrix counts as singular when `sigma_min <= SINGULARITY * ||A||_2`.
/// Scale-invariant stand-in for an exact `det = 0` test.
pub const SINGULARITY: f64 = 1e-8;

/// Normalized backward error allowed for a polynomial eigenvalue:
/// `sigma_min(P(l)) <= POLYEIG_RESIDUAL * max_i ||A_i||_2 * max(1, |l|)^m`.
/// Looser than [`EIG_RESIDUAL`] because linearization and evaluation errors
/// compound.
pub const POLYEIG_RESIDUAL: f64 = 1e-6;

/// Interpolated determinant coefficients below `DET_POLY_SNAP * max |c_k|`
/// are snapped to zero.
pub const DET_POLY_SNAP: f64 = 1e-9;

/// Trailing scalar-polynomial coefficients below
/// `SCALAR_TRIM * max |c_k|` are trimmed when normalizing the degree.
pub const SCALAR_TRIM: f64 = 1e-10;

/// Default entrywise/row-sum tolerance when validating doubly stochastic
/// and permutation coefficients.
pub const FAMILY_DS: f64 = 1e-10;

/// Default tolerance for validating commuting Schur-stable families
/// (monicity and scaled commutator norms).
pub const FAMILY_SR: f64 = 1e-8;

/// Commutator ceiling met by construction:
/// `||A_i A_j - A_j A_i||_2 <= COMMUTATOR * max_i ||A_i||_2^2`.
pub const COMMUTATOR: f64 = 1e-10;

/// Strict theorem inequalities are tested against the closed interval padded
/// by this margin; the signed margin itself is always reported.
pub const MARGIN_PAD: f64 = 1e-6;

/// Default clustering threshold (relative to the largest modulus) when
/// counting distinct eigenvalues.
pub const DISTINCT_CLUSTER: f64 = 1e-6;

/// Orthonormality defect allowed for generated unitary matrices.
pub const UNITARY_DEFECT: f64 = 1e-12;

/// Relative convergence target for singular-value power iterations.
pub const SIGMA_REL: f64 = 1e-12;
