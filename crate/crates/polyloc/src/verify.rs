//! Theorem-checking layer: analytic root bounds, containment checks with
//! signed margins, distinct/unit-circle eigenvalue counting, and sweep
//! campaigns that chase the optimality limits empirically.

use num_complex::Complex64;
use serde::Serialize;

use crate::ensembles::{self, EnsembleSpec, Family};
use crate::error::{Error, Result};
use crate::matpoly::{MatrixPolynomial, ScalarPolynomial};
use crate::numerics::{self, Spectrum};
use crate::tol;

/// Containment report against the annulus `(1/2, 2)` for the doubly
/// stochastic family.
#[derive(Debug, Clone, Serialize)]
pub struct AnnulusReport {
    pub instance: String,
    pub moduli: Vec<f64>,
    /// `min |l| - 1/2`.
    pub inner_margin: f64,
    /// `2 - max |l|`.
    pub outer_margin: f64,
    pub pass: bool,
}

/// Containment report against the disc of radius `r_eff + 1` for the
/// commuting Schur-stable family.
#[derive(Debug, Clone, Serialize)]
pub struct DiscReport {
    pub instance: String,
    /// Largest spectral radius over the non-leading coefficients.
    pub r_eff: f64,
    /// `r_eff + 1`.
    pub bound: f64,
    pub max_modulus: f64,
    /// `bound - max_modulus`.
    pub margin: f64,
    pub pass: bool,
}

/// One deterministic witness evaluation inside a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessPoint {
    pub label: String,
    pub parameter: f64,
    pub modulus: f64,
}

/// Aggregate of a sweep campaign: random trials plus the deterministic
/// witness sequences, with the observed extreme moduli.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub spec: EnsembleSpec,
    pub observed_min: f64,
    pub observed_max: f64,
    pub witnesses: Vec<WitnessPoint>,
    pub analytic_inf: f64,
    pub analytic_sup: f64,
}

/// Classical coefficient-ratio root bound: every root of `p` has modulus at
/// most `1 + max_i |a_i / a_n|`.
pub fn cauchy_bound(p: &ScalarPolynomial) -> Result<f64> {
    if p.degree() == 0 || p.leading().norm() == 0.0 {
        return Err(Error::Degree(
            "root bound needs degree >= 1 and a nonzero leading coefficient".into(),
        ));
    }
    let lead = p.leading().norm();
    let max_ratio = p.coeffs()[..p.degree()]
        .iter()
        .map(|c| c.norm() / lead)
        .fold(0.0, f64::max);
    Ok(1.0 + max_ratio)
}

/// Annulus containment for a doubly stochastic family member, with the
/// default family tolerance.
pub fn annulus_check(p: &MatrixPolynomial) -> Result<AnnulusReport> {
    annulus_check_with_tol(p, tol::FAMILY_DS)
}

pub fn annulus_check_with_tol(p: &MatrixPolynomial, family_tol: f64) -> Result<AnnulusReport> {
    ensembles::validate_d_detail(p, family_tol).map_err(|reason| Error::FamilyViolation {
        family: "doubly stochastic",
        reason,
    })?;
    let spectrum = p.polyeig()?;
    let moduli = spectrum.moduli();
    let inner_margin = spectrum.min_modulus() - 0.5;
    let outer_margin = 2.0 - spectrum.max_modulus();
    Ok(AnnulusReport {
        instance: format!("d-n{}-m{}", p.size(), p.degree()),
        moduli,
        inner_margin,
        outer_margin,
        pass: inner_margin > -tol::MARGIN_PAD && outer_margin > -tol::MARGIN_PAD,
    })
}

/// Disc containment for a commuting Schur-stable family member, with the
/// default family tolerance.
pub fn disc_check(p: &MatrixPolynomial, r_declared: f64) -> Result<DiscReport> {
    disc_check_with_tol(p, r_declared, tol::FAMILY_SR)
}

pub fn disc_check_with_tol(
    p: &MatrixPolynomial,
    r_declared: f64,
    family_tol: f64,
) -> Result<DiscReport> {
    if r_declared <= 0.0 {
        return Err(Error::Domain(format!(
            "r must be positive, got {r_declared}"
        )));
    }
    ensembles::validate_sr_detail(p, r_declared, family_tol).map_err(|(pred, reason)| {
        Error::FamilyViolation {
            family: "commuting Schur-stable",
            reason: format!("{} check failed: {reason}", pred.name()),
        }
    })?;
    let m = p.degree();
    let r_eff = p.coeffs()[..m]
        .iter()
        .map(|a| numerics::spectral_radius(a).expect("square"))
        .fold(0.0, f64::max);
    let bound = r_eff + 1.0;
    let spectrum = p.polyeig()?;
    let max_modulus = spectrum.max_modulus();
    let margin = bound - max_modulus;
    Ok(DiscReport {
        instance: format!("sr-n{}-m{}", p.size(), m),
        r_eff,
        bound,
        max_modulus,
        margin,
        pass: margin > -tol::MARGIN_PAD,
    })
}

/// The `m` distinct points `exp(2 pi i j / (m+1))`, `j = 1..m`: roots of
/// `z^m + ... + z + 1`, which divides the determinant of any polynomial with
/// doubly stochastic coefficients.
pub fn unit_circle_points(m: usize) -> Vec<Complex64> {
    let tau = 2.0 * std::f64::consts::PI / (m + 1) as f64;
    (1..=m)
        .map(|j| Complex64::from_polar(1.0, tau * j as f64))
        .collect()
}

/// Confirms the guaranteed unit-circle eigenvalues of a polynomial whose
/// coefficients are all doubly stochastic (a singular leading coefficient is
/// fine: nothing here linearizes). Returns each confirmed point with the
/// residual `||P(w) 1||_2`; any failed point is a theorem violation.
pub fn unit_circle_eigs(p: &MatrixPolynomial, tolerance: f64) -> Result<Vec<(Complex64, f64)>> {
    assert!(tolerance > 0.0);
    ensembles::validate_ds_only_detail(p, tolerance).map_err(|reason| Error::FamilyViolation {
        family: "doubly stochastic",
        reason,
    })?;
    let n = p.size();
    let ones = vec![Complex64::new(1.0, 0.0); n];
    let scale = p.max_coeff_norm();
    let mut confirmed = Vec::with_capacity(p.degree());
    for w in unit_circle_points(p.degree()) {
        let image = p.evaluate(w).matvec(&ones);
        let residual = image.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if residual > tolerance * scale {
            return Err(Error::TheoremViolation(format!(
                "||P(w) 1|| = {residual:.3e} at w = {w} exceeds {:.3e}",
                tolerance * scale
            )));
        }
        if !p.is_eigenvalue(w, tolerance) {
            return Err(Error::TheoremViolation(format!(
                "sigma_min(P(w)) at w = {w} exceeds the eigenvalue tolerance"
            )));
        }
        confirmed.push((w, residual));
    }
    Ok(confirmed)
}

/// Divides `det P` by `z^m + ... + z + 1` and returns the largest remainder
/// coefficient magnitude; exact divisibility is guaranteed for doubly
/// stochastic coefficients.
pub fn divisibility_check(p: &MatrixPolynomial) -> f64 {
    let m = p.degree();
    let divisor = ScalarPolynomial::new(vec![Complex64::new(1.0, 0.0); m + 1]);
    let det = p.det_poly();
    let (_, remainder) = det.div_rem(&divisor);
    remainder.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Number of single-linkage clusters of the spectrum in the complex plane.
pub fn distinct_count(s: &Spectrum, cluster_tol: f64) -> usize {
    distinct_point_count(s.eigenvalues(), cluster_tol)
}

pub fn distinct_point_count(points: &[Complex64], cluster_tol: f64) -> usize {
    assert!(cluster_tol > 0.0);
    let k = points.len();
    let mut parent: Vec<usize> = (0..k).collect();

    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }

    for i in 0..k {
        for j in i + 1..k {
            if (points[i] - points[j]).norm() <= cluster_tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    (0..k).filter(|&i| find(&mut parent, i) == i).count()
}

/// Inf-witness radii used by the doubly stochastic sweep.
pub const DS_INF_WITNESS_RADII: [f64; 3] = [0.6, 0.55, 0.51];
/// Largest sup-witness degree used by the doubly stochastic sweep.
pub const DS_SUP_WITNESS_MAX_DEGREE: usize = 12;
/// `(m, n_param)` schedule for the Schur sup-witness sequence.
pub const SCHUR_WITNESS_STEPS: [usize; 6] = [2, 4, 8, 16, 32, 64];

/// Runs `trials` random instances plus the deterministic witness sequences
/// for the requested family, enforcing every instance's containment theorem
/// and aggregating the observed extreme moduli.
pub fn sweep_extremes(spec: &EnsembleSpec) -> Result<SweepReport> {
    spec.validate()?;
    match spec.family {
        Family::Ds => sweep_ds(spec),
        Family::Schur => sweep_schur(spec),
    }
}

fn sweep_ds(spec: &EnsembleSpec) -> Result<SweepReport> {
    let mut witnesses = Vec::new();
    let mut observed_min = f64::INFINITY;
    let mut observed_max: f64 = 0.0;

    for r in DS_INF_WITNESS_RADII {
        let (p, d) = ensembles::extremal_inf_witness(r)?;
        let report = annulus_check(&p)?;
        require_annulus(&report, &format!("inf witness r = {r} (d = {d})"))?;
        let min = report.inner_margin + 0.5;
        observed_min = observed_min.min(min);
        observed_max = observed_max.max(2.0 - report.outer_margin);
        witnesses.push(WitnessPoint {
            label: "inf-witness".into(),
            parameter: r,
            modulus: min,
        });
    }
    for m in 1..=DS_SUP_WITNESS_MAX_DEGREE {
        let p = ensembles::extremal_sup_witness(m);
        let report = annulus_check(&p)?;
        require_annulus(&report, &format!("sup witness m = {m}"))?;
        let max = 2.0 - report.outer_margin;
        observed_min = observed_min.min(report.inner_margin + 0.5);
        observed_max = observed_max.max(max);
        witnesses.push(WitnessPoint {
            label: "sup-witness".into(),
            parameter: m as f64,
            modulus: max,
        });
    }

    let k = ensembles::default_birkhoff_terms(spec.n);
    for trial in 0..spec.trials {
        let p = ensembles::random_d_polynomial(spec.n, spec.m, k, spec.seed + trial as u64);
        let report = annulus_check(&p)?;
        require_annulus(&report, &format!("trial {trial}"))?;
        observed_min = observed_min.min(report.inner_margin + 0.5);
        observed_max = observed_max.max(2.0 - report.outer_margin);
    }

    Ok(SweepReport {
        spec: spec.clone(),
        observed_min,
        observed_max,
        witnesses,
        analytic_inf: 0.5,
        analytic_sup: 2.0,
    })
}

fn require_annulus(report: &AnnulusReport, what: &str) -> Result<()> {
    if !report.pass {
        return Err(Error::TheoremViolation(format!(
            "{what}: annulus violated (inner margin {:.3e}, outer margin {:.3e})",
            report.inner_margin, report.outer_margin
        )));
    }
    Ok(())
}

fn sweep_schur(spec: &EnsembleSpec) -> Result<SweepReport> {
    let r = spec.r.expect("validated");
    let mut witnesses = Vec::new();
    let mut observed_min = f64::INFINITY;
    let mut observed_max: f64 = 0.0;

    // The zero polynomial I z + 0 pins the infimum: zero is an eigenvalue.
    let zero_poly = MatrixPolynomial::new(vec![
        crate::numerics::ComplexMatrix::zeros(spec.n, spec.n),
        crate::numerics::ComplexMatrix::identity(spec.n),
    ])?;
    let zero_spectrum = zero_poly.polyeig()?;
    observed_min = observed_min.min(zero_spectrum.min_modulus());
    observed_max = observed_max.max(zero_spectrum.max_modulus());
    witnesses.push(WitnessPoint {
        label: "zero-polynomial".into(),
        parameter: spec.n as f64,
        modulus: zero_spectrum.min_modulus(),
    });

    for step in SCHUR_WITNESS_STEPS {
        if r < 1.0 / step as f64 {
            continue;
        }
        let p = ensembles::schur_sup_witness(step, step, r)?;
        let report = disc_check(&p, r)?;
        require_disc(&report, &format!("sup witness m = n_param = {step}"))?;
        observed_max = observed_max.max(report.max_modulus);
        witnesses.push(WitnessPoint {
            label: "schur-sup-witness".into(),
            parameter: step as f64,
            modulus: report.max_modulus,
        });
    }

    for trial in 0..spec.trials {
        let p = ensembles::random_commuting_sr(spec.n, spec.m, r, spec.seed + trial as u64);
        let report = disc_check(&p, r)?;
        require_disc(&report, &format!("trial {trial}"))?;
        observed_max = observed_max.max(report.max_modulus);
    }

    Ok(SweepReport {
        spec: spec.clone(),
        observed_min,
        observed_max,
        witnesses,
        analytic_inf: 0.0,
        analytic_sup: r + 1.0,
    })
}

fn require_disc(report: &DiscReport, what: &str) -> Result<()> {
    if !report.pass {
        return Err(Error::TheoremViolation(format!(
            "{what}: disc bound violated (margin {:.3e})",
            report.margin
        )));
    }
    Ok(())
}
