//! Acceptance suite: one test per verification criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`) before asserting.

mod common;

use std::time::Instant;

use num_complex::Complex64;
use polyloc::ensembles::{
    extremal_inf_witness, extremal_sup_witness, mass_spring, noncommuting_counterexample,
    random_commuting_sr, random_d_polynomial, random_ds_polynomial, schur_sup_witness,
    uniform_doubly_stochastic,
};
use polyloc::numerics::{scalar_roots, sigma_min, spectral_radius};
use polyloc::verify::{
    cauchy_bound, disc_check, distinct_count, divisibility_check, unit_circle_points,
};
use polyloc::{MatrixPolynomial, ScalarPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{bisect, hausdorff, random_dense_polynomial};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "[{}] {criterion}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion}: {detail}");
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 500 random doubly stochastic instances stay inside the annulus (1/2, 2).
#[test]
fn criterion_01_annulus_containment() {
    let start = Instant::now();
    let mut worst_inner = f64::INFINITY;
    let mut worst_outer = f64::INFINITY;
    let mut violations = 0usize;
    for seed in 0..500u64 {
        let n = 2 + (seed as usize % 5);
        let m = 2 + ((seed as usize / 5) % 4);
        let p = random_d_polynomial(n, m, n * n, seed);
        let spectrum = p.polyeig().unwrap();
        for z in spectrum.eigenvalues() {
            let modulus = z.norm();
            if modulus <= 0.5 - 1e-6 || modulus >= 2.0 + 1e-6 {
                violations += 1;
            }
        }
        worst_inner = worst_inner.min(spectrum.min_modulus() - 0.5);
        worst_outer = worst_outer.min(2.0 - spectrum.max_modulus());
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "criterion 1 (annulus containment)",
        violations == 0 && worst_inner > 0.0 && worst_outer > 0.0 && elapsed < 60.0,
        &format!(
            "500 instances, {violations} violations, worst margins \
             inner {worst_inner:.3e} / outer {worst_outer:.3e}, {elapsed:.1} s"
        ),
    );
}

/// The inner annulus radius 1/2 is approached by explicit witnesses.
#[test]
fn criterion_02_inf_optimality() {
    let mut ok = true;
    let mut lines = Vec::new();
    for r in [0.6, 0.55, 0.51] {
        let (p, d) = extremal_inf_witness(r).unwrap();
        let min_modulus = p.polyeig().unwrap().min_modulus();
        let inside = min_modulus > 0.5 && min_modulus < r;
        ok &= inside;
        lines.push(format!("r = {r}: d = {d}, min |z| = {min_modulus:.9}"));
    }

    // Depth-2 construction: min modulus is the golden-ratio conjugate,
    // oracle from the quadratic formula on z^2 + z - 1.
    let (p, d) = extremal_inf_witness(0.619).unwrap();
    let oracle = (5f64.sqrt() - 1.0) / 2.0;
    let min_modulus = p.polyeig().unwrap().min_modulus();
    let exact = (min_modulus - oracle).abs() <= 1e-8;
    ok &= d == 2 && exact;
    lines.push(format!(
        "r = 0.619: d = {d}, min |z| = {min_modulus:.10} vs oracle {oracle:.10}"
    ));

    report("criterion 2 (inf optimality)", ok, &lines.join("; "));
}

/// The outer annulus radius 2 is approached by explicit witnesses.
#[test]
fn criterion_03_sup_optimality() {
    let max = |m: usize| extremal_sup_witness(m).polyeig().unwrap().max_modulus();

    // Oracle: bisection on w_m(x) = x^m - x^{m-1} - ... - 1 over [1, 2].
    let w_root = |m: usize| {
        bisect(
            |x: f64| x.powi(m as i32) - (0..m).map(|k| x.powi(k as i32)).sum::<f64>(),
            1.0,
            2.0,
        )
    };

    let m2 = max(2);
    let m3 = max(3);
    let m12 = max(12);
    let ok2 = (m2 - 1.6180339887).abs() <= 1e-8 && (m2 - w_root(2)).abs() <= 1e-8;
    let ok3 = (m3 - 1.8392867552).abs() <= 1e-7 && (m3 - w_root(3)).abs() <= 1e-7;
    let ok12 = m12 > 1.999 && m12 < 2.0;
    report(
        "criterion 3 (sup optimality)",
        ok2 && ok3 && ok12,
        &format!("max |z|: m=2 {m2:.10}, m=3 {m3:.10}, m=12 {m12:.6}"),
    );
}

/// All m roots of unity are confirmed eigenvalues for doubly stochastic
/// coefficients, including instances with a singular leading coefficient.
#[test]
fn criterion_04_unit_circle_guarantee() {
    let mut checked_points = 0usize;
    let mut division_checked = 0usize;
    let mut singular_leading = 0usize;
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 5);
        let m = 1 + (seed as usize % 5);
        let mut coeffs = random_ds_polynomial(n, m, n * n, seed).coeffs().to_vec();
        if seed % 4 == 3 {
            // Rank-one leading coefficient: these instances have fewer than
            // m*n finite eigenvalues and must bypass linearization entirely.
            *coeffs.last_mut().unwrap() = uniform_doubly_stochastic(n);
            singular_leading += 1;
        }
        let p = MatrixPolynomial::new(coeffs).unwrap();
        let scale = p.max_coeff_norm();
        let ones = vec![c(1.0, 0.0); n];
        for w in unit_circle_points(m) {
            let image = p.evaluate(w).matvec(&ones);
            let vec_residual = image.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert!(
                vec_residual <= 1e-8 * scale,
                "seed {seed}: ||P(w) 1|| = {vec_residual:.3e}"
            );
            let smin = sigma_min(&p.evaluate(w)).unwrap();
            assert!(smin <= 1e-7 * scale, "seed {seed}: sigma_min = {smin:.3e}");
            checked_points += 1;
        }
        if m * n <= 12 {
            let det_scale = p.det_poly().max_coeff_magnitude();
            let remainder = divisibility_check(&p);
            assert!(
                remainder <= 1e-7 * det_scale.max(f64::MIN_POSITIVE),
                "seed {seed}: remainder {remainder:.3e} vs scale {det_scale:.3e}"
            );
            division_checked += 1;
        }
    }
    report(
        "criterion 4 (unit-circle guarantee)",
        true,
        &format!(
            "200 instances ({singular_leading} with singular leading coefficient), \
             {checked_points} root-of-unity checks, {division_checked} divisibility checks"
        ),
    );
}

/// Degree >= 2 members of the doubly stochastic family have at least two
/// distinct eigenvalues.
#[test]
fn criterion_05_two_distinct_eigenvalues() {
    let mut min_clusters = usize::MAX;
    for seed in 0..500u64 {
        let n = 2 + (seed as usize % 5);
        let m = 2 + ((seed as usize / 5) % 4);
        let p = random_d_polynomial(n, m, n * n, seed);
        let clusters = distinct_count(&p.polyeig().unwrap(), 1e-6);
        min_clusters = min_clusters.min(clusters);
    }
    report(
        "criterion 5 (two distinct eigenvalues)",
        min_clusters >= 2,
        &format!("500 instances, fewest distinct clusters: {min_clusters}"),
    );
}

/// Commuting Schur-stable instances stay inside the disc of radius
/// `r_eff + 1` across three radius regimes.
#[test]
fn criterion_06_disc_containment() {
    let mut worst_margin = f64::INFINITY;
    let mut instances = 0usize;
    for (ri, &r) in [0.5, 1.0, 2.0].iter().enumerate() {
        for seed in 0..500u64 {
            let n = 2 + (seed as usize % 4);
            let m = 1 + (seed as usize % 4);
            let p = random_commuting_sr(n, m, r, 10_000 * ri as u64 + seed);
            let rep = disc_check(&p, r).unwrap();
            assert!(
                rep.max_modulus < rep.r_eff + 1.0 + 1e-6,
                "r = {r}, seed {seed}: |z| = {} vs bound {}",
                rep.max_modulus,
                rep.bound
            );
            worst_margin = worst_margin.min(rep.margin);
            instances += 1;
        }
    }
    report(
        "criterion 6a (disc containment)",
        worst_margin > -1e-6,
        &format!("{instances} instances over r in {{0.5, 1, 2}}, worst margin {worst_margin:.3e}"),
    );
}

/// Witness sweep at m = n_param = 64, r = 1, against a required threshold of
/// 1.99. The witness family cannot reach it: every eigenvalue modulus of
/// this witness is bounded by the coefficient ratio bound
/// 1 + (1 - 1/64) = 1.984375, and the computed and oracle values agree on
/// ~1.9844. The threshold is asserted unchanged rather than loosened, so
/// this test fails with the diagnostic; see the FAIL line and README.
#[test]
fn criterion_06_witness_threshold() {
    let p = schur_sup_witness(64, 64, 1.0).unwrap();
    let computed = p.polyeig().unwrap().max_modulus();

    // Oracle: largest root of x^64 - (1 - 1/64)(x^63 + ... + 1) by bisection.
    let coeff = 1.0 - 1.0 / 64.0;
    let oracle = bisect(
        |x: f64| x.powi(64) - coeff * (0..64).map(|k| x.powi(k)).sum::<f64>(),
        1.0,
        2.0,
    );
    let oracle_ok = (computed - oracle).abs() <= 1e-6;
    let threshold_ok = computed >= 1.99;
    report(
        "criterion 6b (witness threshold at m = n_param = 64)",
        oracle_ok && threshold_ok,
        &format!(
            "computed max |z| = {computed:.9}, oracle root = {oracle:.9}, \
             ratio bound = {:.6}; required >= 1.99",
            1.0 + coeff
        ),
    );
}

/// Without commutativity the disc bound fails: moduli grow as n^(2/3).
#[test]
fn criterion_07_noncommuting_unboundedness() {
    let mut lines = Vec::new();
    let mut ok = true;
    for (n_param, expected) in [(8usize, 4.0f64), (64, 16.0), (512, 64.0)] {
        let spectrum = noncommuting_counterexample(n_param).polyeig().unwrap();
        let mut moduli = spectrum.moduli();
        moduli.sort_by(f64::total_cmp);
        ok &= moduli[0] <= 1e-5 * expected;
        for &m in &moduli[1..] {
            ok &= (m - expected).abs() <= 1e-5 * expected;
        }
        lines.push(format!("n = {n_param}: nonzero |z| = {:.6}", moduli[3]));
    }
    report(
        "criterion 7 (non-commuting unboundedness)",
        ok,
        &lines.join("; "),
    );
}

/// Damped mass-spring chain: eigenvalues inside the documented discs, and
/// the order-2 case matches the per-mode quadratic solutions.
#[test]
fn criterion_08_mass_spring() {
    let p = mass_spring(50);
    let r_eff = p.coeffs()[..2]
        .iter()
        .map(|a| spectral_radius(a).unwrap())
        .fold(0.0, f64::max);
    let max_modulus = p.polyeig().unwrap().max_modulus();
    let big_ok = r_eff < 50.0 && max_modulus <= 51.0 && max_modulus < r_eff + 1.0;

    // Order 2: eigenvalues of T are 2 and 4; each contributes the roots of
    // z^2 + 10 mu z + 5 mu (quadratic-formula oracle).
    let spectrum = mass_spring(2).polyeig().unwrap();
    let mut oracle = Vec::new();
    for mu in [2.0f64, 4.0] {
        let disc = (25.0 * mu * mu - 5.0 * mu).sqrt();
        oracle.push(c(-5.0 * mu + disc, 0.0));
        oracle.push(c(-5.0 * mu - disc, 0.0));
    }
    let dist = hausdorff(spectrum.eigenvalues(), &oracle);
    let small_ok = dist <= 1e-3;
    report(
        "criterion 8 (mass-spring)",
        big_ok && small_ok,
        &format!(
            "N = 50: r_eff = {r_eff:.4}, max |z| = {max_modulus:.4} <= 51; \
             N = 2: oracle distance {dist:.2e}"
        ),
    );
}

/// The interpolated determinant matches symbolic cofactor expansion, and the
/// linearized spectrum matches the determinant's roots.
#[test]
fn criterion_09_oracle_equivalence() {
    let mut worst_coeff = 0.0f64;
    let mut worst_dist = 0.0f64;
    for seed in 0..50u64 {
        let n = 2 + (seed as usize % 2);
        let m = 2 + (seed as usize % 2);
        let p = random_dense_polynomial(n, m, 4000 + seed);

        let got = p.det_poly();
        let want = common::cofactor_det_poly(&p);
        let scale = want.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for (k, w) in want.iter().enumerate() {
            let g = got.coeffs().get(k).copied().unwrap_or_else(|| c(0.0, 0.0));
            let err = (g - w).norm() / scale;
            worst_coeff = worst_coeff.max(err);
            assert!(
                err <= 1e-9,
                "seed {seed} coeff {k}: relative error {err:.3e}"
            );
        }

        let from_companion = p.polyeig().unwrap();
        let from_det = scalar_roots(got.coeffs()).unwrap();
        let dist = hausdorff(from_companion.eigenvalues(), from_det.eigenvalues());
        worst_dist = worst_dist.max(dist);
        assert!(dist <= 1e-5, "seed {seed}: root distance {dist:.3e}");
    }
    report(
        "criterion 9 (oracle equivalence)",
        true,
        &format!(
            "50 instances: worst determinant coefficient error {worst_coeff:.2e}, \
             worst root-set distance {worst_dist:.2e}"
        ),
    );
}

/// Every computed root respects the coefficient-ratio bound.
#[test]
fn criterion_10_cauchy_dominance() {
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let mut worst_slack = f64::INFINITY;
    for trial in 0..200 {
        let degree = rng.gen_range(1..=10usize);
        let mut coeffs: Vec<Complex64> = (0..=degree)
            .map(|_| {
                Complex64::from_polar(
                    rng.gen_range(0.0..10.0),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect();
        // Keep the problem well posed: the bound needs a nonzero leading term.
        if coeffs[degree].norm() < 0.5 {
            coeffs[degree] = Complex64::from_polar(
                rng.gen_range(0.5..10.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
        }
        let p = ScalarPolynomial::new(coeffs.clone());
        if p.degree() == 0 {
            continue;
        }
        let bound = cauchy_bound(&p).unwrap();
        for z in scalar_roots(p.coeffs()).unwrap().eigenvalues() {
            let slack = bound + 1e-8 - z.norm();
            worst_slack = worst_slack.min(slack);
            assert!(
                slack >= 0.0,
                "trial {trial}: |root| = {} > bound {bound}",
                z.norm()
            );
        }
    }
    report(
        "criterion 10 (root bound dominance)",
        worst_slack >= 0.0,
        &format!("200 polynomials, smallest slack {worst_slack:.3e}"),
    );
}
