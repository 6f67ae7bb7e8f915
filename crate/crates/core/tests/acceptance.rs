//! Acceptance suite: one test per acceptance criterion, each printing a
//! PASS/FAIL line per sub-check (run with `--nocapture` to see them).
//!
//! Criterion 1 contains one sub-check that is expected to stay red: the
//! verbatim constant-of-motion claim [J, H] = 0 for the full Hamiltonian.
//! J anticommutes with the single reflections, so the commutator equals
//! i·(-4w)(mu1 R1 + mu2 R2) J p identically; the suite verifies that
//! structure to machine precision and reports the claim as refuted instead
//! of weakening the check. Every other criterion is green.

use dunkl_landau::angular::{angular_states_up_to, LambdaBranch, Sector};
use dunkl_landau::dunkl2d::{
    angular_momentum_real, j_commutator_residual, seeded_polynomials, Axis, DunklParams,
    Hamiltonian, Polynomial2D,
};
use dunkl_landau::oracle::{oracle_spectrum, RadialGrid};
use dunkl_landau::radial::{inner_product_quadrature, radial_eigenfunction};
use dunkl_landau::spectrum::ModelParams;
use dunkl_landau::verify::{
    discrepancy_table, run_angular_suite, run_oracle_suite, run_radial_suite,
    run_spectrum_suite, run_verification, MU_CONFIGS, ORACLE_CONFIGS,
};

const SEED: u64 = 4475719;

struct Criterion {
    failures: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, measured: f64, tolerance: f64) {
        let pass = measured <= tolerance;
        println!(
            "  {} {:<52} measured {:.3e} (tolerance {:.1e})",
            if pass { "PASS" } else { "FAIL" },
            name,
            measured,
            tolerance
        );
        if !pass {
            self.failures
                .push(format!("{name}: {measured:.3e} > {tolerance:.1e}"));
        }
    }

    fn check_range(&mut self, name: &str, measured: f64, lo: f64, hi: f64) {
        let pass = measured >= lo && measured <= hi;
        println!(
            "  {} {:<52} measured {:.4} (range [{lo}, {hi}])",
            if pass { "PASS" } else { "FAIL" },
            name,
            measured
        );
        if !pass {
            self.failures
                .push(format!("{name}: {measured} outside [{lo}, {hi}]"));
        }
    }

    fn finish(self, label: &str) {
        println!(
            "ACCEPTANCE {label}: {}",
            if self.failures.is_empty() {
                "PASS"
            } else {
                "FAIL"
            }
        );
        assert!(
            self.failures.is_empty(),
            "{label} sub-checks failed:\n  {}",
            self.failures.join("\n  ")
        );
    }
}

/// Criterion 1: operator identities with exact coefficient residuals on 50
/// seeded polynomials of degree <= 8, including the printed
/// constant-of-motion claim for the full Hamiltonian.
#[test]
fn criterion_1_operator_identity_suite() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    let polys = seeded_polynomials(SEED, 50, 8);

    let mut pro1 = 0.0f64;
    let mut pro2 = 0.0f64;
    let mut res12 = 0.0f64;
    let mut res3 = 0.0f64;
    let mut commutator = 0.0f64;
    let mut structure = 0.0f64;

    for &(m1, m2) in &MU_CONFIGS {
        let mu = DunklParams::new(m1, m2).unwrap();
        for p in &polys {
            let d = p.dunkl_derivative(Axis::X, &mu).reflect(Axis::X).distance(
                &p.reflect(Axis::X).dunkl_derivative(Axis::X, &mu).scale(-1.0),
            );
            pro1 = pro1.max(d);
            pro1 = pro1.max(p.reflect(Axis::X).reflect(Axis::X).distance(p));
            pro1 = pro1.max(
                p.mul_monomial(1, 0)
                    .reflect(Axis::X)
                    .distance(&p.reflect(Axis::X).mul_monomial(1, 0).scale(-1.0)),
            );

            pro2 = pro2.max(
                p.reflect(Axis::X)
                    .reflect(Axis::Y)
                    .distance(&p.reflect(Axis::Y).reflect(Axis::X)),
            );
            pro2 = pro2.max(
                p.dunkl_derivative(Axis::Y, &mu)
                    .dunkl_derivative(Axis::X, &mu)
                    .distance(&p.dunkl_derivative(Axis::X, &mu).dunkl_derivative(Axis::Y, &mu)),
            );
            let heis = p
                .mul_monomial(1, 0)
                .dunkl_derivative(Axis::X, &mu)
                .sub(&p.dunkl_derivative(Axis::X, &mu).mul_monomial(1, 0));
            pro2 = pro2.max(heis.distance(&p.add(&p.reflect(Axis::X).scale(2.0 * m1))));

            let xd2 = |q: &Polynomial2D| q.dunkl_derivative(Axis::Y, &mu).mul_monomial(1, 0);
            let yd1 = |q: &Polynomial2D| q.dunkl_derivative(Axis::X, &mu).mul_monomial(0, 1);
            res12 = res12.max(
                xd2(p)
                    .dunkl_laplacian(&mu)
                    .sub(&xd2(&p.dunkl_laplacian(&mu)))
                    .distance(
                        &p.dunkl_derivative(Axis::X, &mu)
                            .dunkl_derivative(Axis::Y, &mu)
                            .scale(2.0),
                    ),
            );
            res12 = res12.max(
                yd1(p)
                    .dunkl_laplacian(&mu)
                    .sub(&yd1(&p.dunkl_laplacian(&mu)))
                    .distance(
                        &p.dunkl_derivative(Axis::Y, &mu)
                            .dunkl_derivative(Axis::X, &mu)
                            .scale(2.0),
                    ),
            );

            let mut rp = p.clone();
            for _ in 0..3 {
                rp = rp.mul_rho2();
            }
            for axis in [Axis::X, Axis::Y] {
                let lhs = rp.reflection_difference(axis).scale(mu.mu(axis));
                let mut rhs = p.reflection_difference(axis).scale(mu.mu(axis));
                for _ in 0..3 {
                    rhs = rhs.mul_rho2();
                }
                res3 = res3.max(lhs.distance(&rhs));
            }

            for &(b, w) in &[(0.0, 1.0), (1.0, 1.0)] {
                let h = Hamiltonian {
                    params: mu,
                    scaled_b: b,
                    scaled_omega: w,
                };
                let res = j_commutator_residual(p, &h);
                commutator = commutator.max(res.max_abs_coeff());
                let ap = angular_momentum_real(p, &mu);
                let predicted = ap
                    .reflect(Axis::X)
                    .scale(m1)
                    .add(&ap.reflect(Axis::Y).scale(m2))
                    .scale(-4.0 * w);
                structure = structure.max(res.im.distance(&predicted));
            }
        }
    }

    c.check("pro1: reflection/derivative/coordinate identities", pro1, 1e-11);
    c.check("pro2: commuting reflections and Dunkl-Heisenberg", pro2, 1e-11);
    c.check("res1/res2: Laplacian commutation", res12, 1e-11);
    c.check("res3: radial multipliers commute", res3, 1e-11);
    println!(
        "  NOTE the [J, H] residual below equals i(-4w)(mu1 R1 + mu2 R2) J p exactly\n  \
         (structure deviation {structure:.3e}); the printed claim [J, H] = 0 does not\n  \
         hold once the oscillator reflection term 2w(1 + mu1 R1 + mu2 R2) is present."
    );
    c.check(
        "residual matches the reflection-term prediction",
        structure,
        1e-11,
    );
    c.check("[J, H] = 0 for the full Hamiltonian (as printed)", commutator, 1e-11);
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 1 (operator identities)");
}

/// Criterion 2: angular eigenvalue equation (FD with Richardson), Gram
/// matrix and the J² identity for ℓ <= 4, three μ configurations.
#[test]
fn criterion_2_angular_suite() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    let suite = run_angular_suite().expect("angular suite");
    c.check("eigenvalue equation sup-residual", suite.eigen, 1e-6);
    c.check("Gram matrix deviation from identity", suite.gram, 1e-8);
    c.check("J-squared FD identity", suite.j_squared_fd, 1e-5);
    c.check("classical limit of eigenvalues", suite.classical, 1e-6);
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 2 (angular suite)");
}

/// Criterion 3: su(1,1) commutators, O0 eigenvalues, ladder coefficients
/// and the Casimir, for n <= 6 on both case potentials.
#[test]
fn criterion_3_su11_suite() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    let suite = run_radial_suite(SEED).expect("radial suite");
    c.check("commutators [O0,O±], [O-,O+]", suite.commutators, 1e-11);
    c.check("O0 eigenvalues n + k", suite.o0_eigen, 1e-10);
    c.check("ladder coefficients sqrt((n+1)(2k+n))", suite.ladder, 1e-10);
    c.check("Casimir eigenvalue k(k-1)", suite.casimir, 1e-10);
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 3 (su(1,1) suite)");
}

/// Criterion 4: finite-difference oracle vs the closed-form eigenvalues for
/// six configurations spanning both parity classes, and the O(h²)
/// convergence factor under step halving.
#[test]
fn criterion_4_oracle_agreement() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    let grid = RadialGrid::default_oracle();
    for &(ell, m1, m2) in &ORACLE_CONFIGS {
        let alpha = 2.0 * ell + m1 + m2;
        let levels = oracle_spectrum(ell, m1, m2, 6, &grid).expect("oracle spectrum");
        let worst = levels
            .iter()
            .enumerate()
            .fold(0.0f64, |m, (n, &ev)| {
                m.max((ev - (4.0 * n as f64 + 2.0 + 2.0 * alpha)).abs())
            });
        c.check(
            &format!("|E_n - (4n+2+2a)| for ell={ell}, alpha={alpha}"),
            worst,
            5e-4,
        );
    }
    let suite = run_oracle_suite().expect("oracle suite");
    c.check_range(
        "convergence factor under step halving (low)",
        suite.convergence_factor_lo,
        3.8,
        4.2,
    );
    c.check_range(
        "convergence factor under step halving (high)",
        suite.convergence_factor_hi,
        3.8,
        4.2,
    );
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 4 (oracle agreement)");
}

/// Criterion 5: radial residual H R_nl - E-tilde R_nl = 0 with
/// E-tilde = 4n + 2 + 2a, both case potentials, n <= 6.
#[test]
fn criterion_5_radial_residual() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    let suite = run_radial_suite(SEED).expect("radial suite");
    c.check("residual on eigenfunctions (relative)", suite.residual, 1e-10);
    c.check(
        "centrifugal equality of the two case potentials",
        suite.centrifugal,
        1e-12,
    );
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 5 (radial residual)");
}

/// Criterion 6: reduction limits — at B = 0 the chain and the printed
/// formulas coincide (and Omega = omega); at mu -> 0 the standard Landau
/// formula with k0 = l + 1/2, lambda0 = ±2l is recovered.
#[test]
fn criterion_6_reduction_limits() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    let params = ModelParams::natural_units();
    c.check(
        "Omega = omega at B = 0",
        (params.omega_eff() - params.omega).abs(),
        0.0,
    );
    let suite = run_spectrum_suite();
    c.check(
        "chain equals printed formulas at B = 0 (relative)",
        suite.b_zero_agreement,
        1e-12,
    );
    c.check(
        "mu -> 0 reduction to the standard Landau formula",
        suite.classical_reduction,
        1e-6,
    );
    c.check(
        "chain equals the analytic-route eigenvalue",
        suite.chain_vs_analytic,
        1e-12,
    );
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 6 (reduction limits)");
}

/// Criterion 7: the verification report carries a non-empty chain-vs-printed
/// table with zero deltas at B = 0 and a nonzero delta for some B > 0 row,
/// without failing the required checks.
#[test]
fn criterion_7_discrepancy_report() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    let mut params = ModelParams::natural_units();
    params.b_field = 1.0;
    let rows = discrepancy_table(&params);
    c.check(
        "table emitted (rows > 0)",
        if rows.is_empty() { 1.0 } else { 0.0 },
        0.0,
    );
    let b0_max = rows
        .iter()
        .filter(|r| r.b_field == 0.0)
        .fold(0.0f64, |m, r| m.max(r.delta_e_plus));
    c.check("delta at B = 0", b0_max, 1e-12);
    let b1_max = rows
        .iter()
        .filter(|r| r.b_field > 0.0 && r.ell >= 1.0 && r.delta_e_plus.is_finite())
        .fold(0.0f64, |m, r| m.max(r.delta_e_plus));
    c.check(
        "nonzero delta for some B > 0, l >= 1 row",
        if b1_max > 1e-6 { 0.0 } else { 1.0 },
        0.0,
    );
    // the full report: every REQUIRED check passes while the discrepancy is
    // reported rather than failed
    let report = run_verification(&params, SEED).expect("verification report");
    c.check(
        "all required verification checks pass",
        if report.passed { 0.0 } else { 1.0 },
        0.0,
    );
    c.check(
        "report schema version",
        if report.schema_version == "1" { 0.0 } else { 1.0 },
        0.0,
    );
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 7 (discrepancy report)");
}

/// Criterion 8: joint normalization — radial Gram under r^(1+2mu1+2mu2) dr
/// and angular Gram under |cos|^(2mu1)|sin|^(2mu2) dphi both equal the
/// identity within 1e-8 for n, l <= 4.
#[test]
fn criterion_8_normalization() {
    let start = std::time::Instant::now();
    let mut c = Criterion::new();
    // radial Gram by quadrature, n <= 4 at l in {0, 1/2, ..., 4}
    let mut radial_gram = 0.0f64;
    for &(m1, m2) in &MU_CONFIGS {
        for two_ell in 0..=8u32 {
            let ell = f64::from(two_ell) / 2.0;
            let states: Vec<_> = (0..=4u32)
                .map(|n| radial_eigenfunction(n, ell, m1, m2).unwrap())
                .collect();
            for (i, f) in states.iter().enumerate() {
                for (j, g) in states.iter().enumerate() {
                    let got = inner_product_quadrature(f, g, m1, m2);
                    let want = if i == j { 1.0 } else { 0.0 };
                    radial_gram = radial_gram.max((got - want).abs());
                }
            }
        }
    }
    c.check("radial Gram deviation", radial_gram, 1e-8);

    let mut angular_gram = 0.0f64;
    for &(m1, m2) in &MU_CONFIGS {
        for eps in [1i8, -1] {
            let states = angular_states_up_to(eps, 8);
            angular_gram = angular_gram
                .max(dunkl_landau::angular::gram_deviation(&states, m1, m2).unwrap());
        }
    }
    c.check("angular Gram deviation", angular_gram, 1e-8);

    // the C0 example pinned directly: n=0, l=1 gives C0 = sqrt(2/Gamma(4))
    let f = radial_eigenfunction(0, 1.0, 0.3, 0.7).unwrap();
    let c0 = (2.0f64 / 6.0).sqrt();
    c.check(
        "normalization constant example",
        (f.coeffs()[0] - c0).abs(),
        1e-14,
    );
    let _ = Sector::new(1, 1, 0, LambdaBranch::Zero).unwrap();
    println!("  runtime {:?}", start.elapsed());
    c.finish("criterion 8 (normalization)");
}
