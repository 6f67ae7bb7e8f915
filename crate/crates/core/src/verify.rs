//! Aggregated verification report: runs the operator-identity, angular,
//! su(1,1) and oracle suites and assembles a machine-readable summary.
//!
//! Checks that encode identities the implementation must satisfy are
//! REQUIRED and gate the `passed` flag. Statements taken verbatim from the
//! printed derivation that do not survive verification are reported as
//! findings with their measured residuals instead of failing the run; the
//! chain-vs-printed energy differences get their own table.

use serde::Serialize;

use crate::angular::{
    angular_grid, angular_states_up_to, eigen_residual, gram_deviation, j_squared_residual,
    sectors_up_to, LambdaBranch, Sector,
};
use crate::dunkl2d::{
    angular_momentum_real, b_phi_apply, j_commutator_residual, j_squared_apply,
    polar_laplacian_consistency, reflection_commutator_residual, seeded_polynomials, Axis,
    DunklParams, Hamiltonian, Polynomial2D,
};
use crate::error::Result;
use crate::oracle::{oracle_spectrum, RadialGrid};
use crate::radial::{
    bargmann_k, e_tilde, inner_product, inner_product_quadrature, ladder_coefficient_check,
    radial_eigenfunction, radial_residual, CentrifugalRoute, RadialOperator,
    seeded_quasi_polynomials,
};
use crate::spectrum::{e_tilde_analytic, energy_chain, energy_printed, ModelParams};

pub const REPORT_SCHEMA_VERSION: &str = "1";

/// μ configurations exercised by every suite.
pub const MU_CONFIGS: [(f64, f64); 3] = [(0.3, 0.7), (1.1, 0.2), (0.5, 0.5)];

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    fn new(name: &str, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance,
            pass: measured <= tolerance,
        }
    }
}

/// A verbatim claim that the suites measure rather than assume.
#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub id: String,
    pub claim: String,
    pub status: String,
    pub measured: f64,
    pub note: String,
}

/// One row of the chain-vs-printed energy comparison.
#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyRow {
    pub b_field: f64,
    pub s1: i8,
    pub s2: i8,
    pub ell: f64,
    pub lambda_sign: i8,
    pub n: u32,
    pub e_plus_chain: f64,
    pub e_plus_printed: f64,
    pub delta_e_plus: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub seed: u64,
    pub required_checks: Vec<CheckResult>,
    pub findings: Vec<Finding>,
    pub paper_formula_discrepancy: Vec<DiscrepancyRow>,
    pub passed: bool,
}

fn max_f(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

/// Operator-identity residuals over the seeded polynomial family.
struct IdentitySuite {
    pro1: f64,
    pro2: f64,
    res1_res2: f64,
    res3: f64,
    j_radial: f64,
    j_squared: f64,
    kinetic_commutator: f64,
    product_reflection: f64,
    full_commutator: f64,
    structure_match: f64,
    single_reflection_b0: f64,
    single_reflection_b1: f64,
    polar_consistency: f64,
}

fn run_identity_suite(seed: u64, count: usize) -> IdentitySuite {
    let mut s = IdentitySuite {
        pro1: 0.0,
        pro2: 0.0,
        res1_res2: 0.0,
        res3: 0.0,
        j_radial: 0.0,
        j_squared: 0.0,
        kinetic_commutator: 0.0,
        product_reflection: 0.0,
        full_commutator: 0.0,
        structure_match: 0.0,
        single_reflection_b0: 0.0,
        single_reflection_b1: 0.0,
        polar_consistency: 0.0,
    };
    let polys = seeded_polynomials(seed, count, 8);
    let polar_samples = [(0.7, 0.4), (1.3, 1.1), (0.9, 2.2), (1.7, 4.0)];
    for &(m1, m2) in &MU_CONFIGS {
        let mu = DunklParams::new(m1, m2).unwrap();
        for p in &polys {
            // pro1
            let lhs = p.dunkl_derivative(Axis::X, &mu).reflect(Axis::X);
            let rhs = p.reflect(Axis::X).dunkl_derivative(Axis::X, &mu).scale(-1.0);
            s.pro1 = s.pro1.max(lhs.distance(&rhs));
            s.pro1 = s.pro1.max(p.reflect(Axis::X).reflect(Axis::X).distance(p));
            let lhs = p.mul_monomial(1, 0).reflect(Axis::X);
            let rhs = p.reflect(Axis::X).mul_monomial(1, 0).scale(-1.0);
            s.pro1 = s.pro1.max(lhs.distance(&rhs));

            // pro2
            let ab = p.reflect(Axis::X).reflect(Axis::Y);
            let ba = p.reflect(Axis::Y).reflect(Axis::X);
            s.pro2 = s.pro2.max(ab.distance(&ba));
            let d12 = p.dunkl_derivative(Axis::Y, &mu).dunkl_derivative(Axis::X, &mu);
            let d21 = p.dunkl_derivative(Axis::X, &mu).dunkl_derivative(Axis::Y, &mu);
            s.pro2 = s.pro2.max(d12.distance(&d21));
            let lhs = p
                .mul_monomial(1, 0)
                .dunkl_derivative(Axis::X, &mu)
                .sub(&p.dunkl_derivative(Axis::X, &mu).mul_monomial(1, 0));
            let rhs = p.add(&p.reflect(Axis::X).scale(2.0 * m1));
            s.pro2 = s.pro2.max(lhs.distance(&rhs));

            // res1 / res2
            let xd2 = |q: &Polynomial2D| q.dunkl_derivative(Axis::Y, &mu).mul_monomial(1, 0);
            let yd1 = |q: &Polynomial2D| q.dunkl_derivative(Axis::X, &mu).mul_monomial(0, 1);
            let lhs = xd2(p).dunkl_laplacian(&mu).sub(&xd2(&p.dunkl_laplacian(&mu)));
            let rhs = p
                .dunkl_derivative(Axis::X, &mu)
                .dunkl_derivative(Axis::Y, &mu)
                .scale(2.0);
            s.res1_res2 = s.res1_res2.max(lhs.distance(&rhs));
            let lhs = yd1(p).dunkl_laplacian(&mu).sub(&yd1(&p.dunkl_laplacian(&mu)));
            let rhs = p
                .dunkl_derivative(Axis::Y, &mu)
                .dunkl_derivative(Axis::X, &mu)
                .scale(2.0);
            s.res1_res2 = s.res1_res2.max(lhs.distance(&rhs));

            // res3 with F(ρ) = ρ^(2k), k <= 4
            let mut rp = p.clone();
            for _ in 0..4 {
                rp = rp.mul_rho2();
            }
            for axis in [Axis::X, Axis::Y] {
                let lhs = rp.reflection_difference(axis).scale(mu.mu(axis));
                let mut rhs = p.reflection_difference(axis).scale(mu.mu(axis));
                for _ in 0..4 {
                    rhs = rhs.mul_rho2();
                }
                s.res3 = s.res3.max(lhs.distance(&rhs));
            }

            // J² = 2 B_φ + 2 μ1 μ2 (1 - R1 R2)
            let lhs = j_squared_apply(p, &mu);
            let r1r2 = p.reflect(Axis::X).reflect(Axis::Y);
            let rhs = b_phi_apply(p, &mu)
                .scale(2.0)
                .add(&p.sub(&r1r2).scale(2.0 * m1 * m2));
            s.j_squared = s.j_squared.max(lhs.distance(&rhs));

            for &(b, w) in &[(0.0, 1.0), (1.0, 1.0)] {
                let h = Hamiltonian {
                    params: mu,
                    scaled_b: b,
                    scaled_omega: w,
                };
                let res = j_commutator_residual(p, &h);
                s.full_commutator = s.full_commutator.max(res.max_abs_coeff());
                // residual structure: i·(-4w)(μ1 R1 + μ2 R2) A p
                let ap = angular_momentum_real(p, &mu);
                let predicted = ap
                    .reflect(Axis::X)
                    .scale(m1)
                    .add(&ap.reflect(Axis::Y).scale(m2))
                    .scale(-4.0 * w);
                s.structure_match = s.structure_match.max(res.im.distance(&predicted));

                // reflection commutators
                let r1 = reflection_commutator_residual(p, &h, &[Axis::X]).max_abs_coeff();
                let r2 = reflection_commutator_residual(p, &h, &[Axis::Y]).max_abs_coeff();
                let r12 =
                    reflection_commutator_residual(p, &h, &[Axis::X, Axis::Y]).max_abs_coeff();
                s.product_reflection = s.product_reflection.max(r12);
                if b == 0.0 {
                    s.single_reflection_b0 = s.single_reflection_b0.max(r1.max(r2));
                } else {
                    s.single_reflection_b1 = s.single_reflection_b1.max(r1.max(r2));
                }

                // without the reflection term J commutes exactly
                let h0 = Hamiltonian {
                    params: mu,
                    scaled_b: b,
                    scaled_omega: 0.0,
                };
                s.kinetic_commutator = s
                    .kinetic_commutator
                    .max(j_commutator_residual(p, &h0).max_abs_coeff());
            }
        }
        // J annihilates radially symmetric polynomials
        let mut radial = Polynomial2D::constant(1.0);
        for _ in 0..4 {
            radial = radial.mul_rho2().add(&Polynomial2D::constant(0.5));
            s.j_radial = s
                .j_radial
                .max(angular_momentum_real(&radial, &mu).max_abs_coeff());
        }
        // polar split of the Laplacian at sample points (FD side vs the
        // exact Cartesian values)
        for p in [
            Polynomial2D::from_terms(&[(2, 0, 1.0), (0, 2, 1.0)]),
            Polynomial2D::monomial(2, 1, 1.0),
            Polynomial2D::from_terms(&[(1, 0, 0.5), (1, 2, -0.25), (3, 1, 1.0)]),
        ] {
            let dev = polar_laplacian_consistency(&p, &mu, &polar_samples, 1e-4).unwrap();
            s.polar_consistency = s.polar_consistency.max(dev);
        }
    }
    s
}

/// Angular residuals: eigenvalue equation, Gram matrix, J² consistency and
/// the classical limit.
pub struct AngularSuite {
    pub eigen: f64,
    pub gram: f64,
    pub j_squared_fd: f64,
    pub classical: f64,
}

pub fn run_angular_suite() -> Result<AngularSuite> {
    let grid = angular_grid(2000, 0.02);
    let coarse: Vec<f64> = grid.iter().copied().step_by(40).collect();
    let mut eigen = 0.0f64;
    let mut gram = 0.0f64;
    let mut jsq = 0.0f64;
    for &(m1, m2) in &MU_CONFIGS {
        for eps in [1i8, -1] {
            let states = angular_states_up_to(eps, 8);
            for s in &states {
                eigen = eigen.max(eigen_residual(s, m1, m2, &grid, 2e-3)?);
                jsq = jsq.max(j_squared_residual(s, m1, m2, &coarse, 2e-3)?);
            }
            gram = gram.max(gram_deviation(&states, m1, m2)?);
        }
    }
    // classical limit: |λ| -> even/odd integers
    let mut classical = 0.0f64;
    for eps in [1i8, -1] {
        for s in sectors_up_to(eps, 8) {
            let lambda = crate::angular::angular_eigenvalue(&s, 1e-8, 1e-8);
            classical = classical.max((lambda - lambda.round()).abs());
        }
    }
    Ok(AngularSuite {
        eigen,
        gram,
        j_squared_fd: jsq,
        classical,
    })
}

/// su(1,1) residuals: commutators, O0 eigenvalues, ladder coefficients,
/// Casimir, radial residuals, centrifugal equality, Gram and substitution.
pub struct RadialSuite {
    pub commutators: f64,
    pub o0_eigen: f64,
    pub ladder: f64,
    pub casimir: f64,
    pub residual: f64,
    pub centrifugal: f64,
    pub gram: f64,
    pub substitution: f64,
}

pub fn run_radial_suite(seed: u64) -> Result<RadialSuite> {
    let mut out = RadialSuite {
        commutators: 0.0,
        o0_eigen: 0.0,
        ladder: 0.0,
        casimir: 0.0,
        residual: 0.0,
        centrifugal: 0.0,
        gram: 0.0,
        substitution: 0.0,
    };
    let sector_specs: [(CentrifugalRoute, f64); 5] = [
        (CentrifugalRoute::LambdaPlusSq, 0.0),
        (CentrifugalRoute::LambdaPlusSq, 1.0),
        (CentrifugalRoute::LambdaPlusSq, 2.0),
        (CentrifugalRoute::LambdaMinusSqShifted, 0.5),
        (CentrifugalRoute::LambdaMinusSqShifted, 1.5),
    ];
    for &(m1, m2) in &MU_CONFIGS {
        for &(route, ell) in &sector_specs {
            let op = RadialOperator::new(route, ell, m1, m2);
            // commutators on seeded quasi-polynomials
            for f in seeded_quasi_polynomials(seed ^ 0x5u64, 30, 2.0 * ell, 6) {
                let scale = 100.0 * f.max_abs_coeff().max(1.0);
                let d1 = op
                    .apply_o0(&op.apply_o_plus(&f)?)?
                    .sub(&op.apply_o_plus(&op.apply_o0(&f)?)?)?
                    .distance(&op.apply_o_plus(&f)?);
                let d2 = op
                    .apply_o0(&op.apply_o_minus(&f)?)?
                    .sub(&op.apply_o_minus(&op.apply_o0(&f)?)?)?
                    .distance(&op.apply_o_minus(&f)?.scale(-1.0));
                let d3 = op
                    .apply_o_minus(&op.apply_o_plus(&f)?)?
                    .sub(&op.apply_o_plus(&op.apply_o_minus(&f)?)?)?
                    .distance(&op.apply_o0(&f)?.scale(2.0));
                out.commutators = out.commutators.max(d1.max(d2).max(d3) / scale);
            }
            // eigen/ladder/Casimir/residual over n <= 6
            let k = bargmann_k(ell, m1, m2);
            let sector = sector_for(route, ell);
            for n in 0..=6u32 {
                let f = radial_eigenfunction(n, ell, m1, m2)?;
                let o0 = op.apply_o0(&f)?;
                let want = f.scale(f64::from(n) + k);
                out.o0_eigen = out
                    .o0_eigen
                    .max(o0.distance(&want) / want.max_abs_coeff().max(1e-300));
                let (up, down) = ladder_coefficient_check(n, &sector, m1, m2)?;
                out.ladder = out.ladder.max(up.max(down));
                let cas = op.apply_casimir(&f)?;
                let want = f.scale(k * (k - 1.0));
                out.casimir = out
                    .casimir
                    .max(cas.distance(&want) / f.max_abs_coeff().max(want.max_abs_coeff()));
                let et = e_tilde(n, ell, m1, m2);
                let res = radial_residual(route, &f, ell, m1, m2, et)?;
                out.residual = out
                    .residual
                    .max(res.max_abs_coeff() / (et * f.max_abs_coeff()));
            }
            out.casimir = out
                .casimir
                .max((op.casimir_scalar() - k * (k - 1.0)).abs());
        }
        // centrifugal equality over all valid ℓ
        for two_ell in 0..=8u32 {
            let ell = f64::from(two_ell) / 2.0;
            let a = RadialOperator::new(CentrifugalRoute::LambdaPlusSq, ell, m1, m2);
            let b = RadialOperator::new(CentrifugalRoute::LambdaMinusSqShifted, ell, m1, m2);
            out.centrifugal = out
                .centrifugal
                .max((a.b_coef - b.b_coef).abs() / a.b_coef.abs().max(1.0));
        }
        // Gram via quadrature (independent of the Gamma closed form), n, ℓ <= 4
        for &ell in &[0.0, 1.0, 2.5, 4.0] {
            let states: Vec<_> = (0..=4u32)
                .map(|n| radial_eigenfunction(n, ell, m1, m2))
                .collect::<Result<_>>()?;
            for (i, f) in states.iter().enumerate() {
                for (j, g) in states.iter().enumerate() {
                    let got = inner_product_quadrature(f, g, m1, m2);
                    let want = if i == j { 1.0 } else { 0.0 };
                    out.gram = out.gram.max((got - want).abs());
                    // the exact route must agree with the quadrature route
                    let exact = inner_product(f, g, m1, m2)?;
                    out.gram = out.gram.max((got - exact).abs());
                }
            }
        }
        // substitution identity R = r^(-A/2) u(r)
        for &(n, ell) in &[(0u32, 0.0), (3, 1.0), (4, 1.5)] {
            let alpha_lag = 2.0 * ell + m1 + m2;
            let a_coef = 1.0 + 2.0 * (m1 + m2);
            let c0 = crate::radial::normalization_constant(n, ell, m1, m2)?;
            let f = radial_eigenfunction(n, ell, m1, m2)?;
            for r in [0.5, 1.1, 1.9, 2.8] {
                let u = crate::radial::reference_solution_u(n, alpha_lag, c0, r)?;
                let want = r.powf(-0.5 * a_coef) * u;
                out.substitution = out
                    .substitution
                    .max((f.eval(r) - want).abs() / want.abs().max(1.0));
            }
        }
    }
    Ok(out)
}

fn sector_for(route: CentrifugalRoute, ell: f64) -> Sector {
    let two_ell = (2.0 * ell).round() as u32;
    let branch = if two_ell == 0 {
        LambdaBranch::Zero
    } else {
        LambdaBranch::Plus
    };
    match route {
        CentrifugalRoute::LambdaPlusSq => Sector::new(1, 1, two_ell, branch).unwrap(),
        CentrifugalRoute::LambdaMinusSqShifted => Sector::new(-1, 1, two_ell, branch).unwrap(),
    }
}

/// The six oracle configurations spanning both parity classes with
/// α = 2ℓ + μ1 + μ2 in [0.6, 5].
pub const ORACLE_CONFIGS: [(f64, f64, f64); 6] = [
    (0.0, 0.3, 0.7),   // α = 1.0, even class
    (0.0, 1.1, 0.2),   // α = 1.3, even class
    (0.5, 0.2, 0.4),   // α = 1.6, odd class
    (1.0, 0.3, 0.7),   // α = 3.0, even class
    (1.5, 0.5, 0.5),   // α = 4.0, odd class
    (2.0, 0.45, 0.55), // α = 5.0, even class
];

pub struct OracleSuite {
    pub agreement: f64,
    pub convergence_factor_lo: f64,
    pub convergence_factor_hi: f64,
}

pub fn run_oracle_suite() -> Result<OracleSuite> {
    let grid = RadialGrid::default_oracle();
    let mut agreement = 0.0f64;
    for &(ell, m1, m2) in &ORACLE_CONFIGS {
        let alpha = 2.0 * ell + m1 + m2;
        let levels = oracle_spectrum(ell, m1, m2, 6, &grid)?;
        for (n, &ev) in levels.iter().enumerate() {
            agreement = agreement.max((ev - (4.0 * n as f64 + 2.0 + 2.0 * alpha)).abs());
        }
    }
    // O(h²) convergence on configurations where the wall bias at r_min is
    // far below the truncation error (α >= 1.6)
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &(ell, m1, m2) in &ORACLE_CONFIGS[2..] {
        let alpha = 2.0 * ell + m1 + m2;
        let coarse = oracle_spectrum(ell, m1, m2, 4, &grid)?;
        let fine = oracle_spectrum(ell, m1, m2, 4, &grid.refined())?;
        for n in 0..4 {
            let exact = 4.0 * n as f64 + 2.0 + 2.0 * alpha;
            let factor = (coarse[n] - exact).abs() / (fine[n] - exact).abs();
            lo = lo.min(factor);
            hi = hi.max(factor);
        }
    }
    Ok(OracleSuite {
        agreement,
        convergence_factor_lo: lo,
        convergence_factor_hi: hi,
    })
}

/// Reduction-limit residuals for the spectrum assembly.
pub struct SpectrumSuite {
    pub chain_vs_analytic: f64,
    pub b_zero_agreement: f64,
    pub classical_reduction: f64,
    pub shift_consistency: f64,
}

pub fn run_spectrum_suite() -> SpectrumSuite {
    let mut chain_vs_analytic = 0.0f64;
    for &(m1, m2) in &MU_CONFIGS {
        for two_ell in 0..=6u32 {
            for n in 0..=5u32 {
                let ell = f64::from(two_ell) / 2.0;
                let a = e_tilde(n, ell, m1, m2);
                let b = e_tilde_analytic(n, ell, m1, m2);
                chain_vs_analytic = chain_vs_analytic.max((a - b).abs() / a);
            }
        }
    }
    let mut b_zero = 0.0f64;
    let params = ModelParams::natural_units();
    for eps in [1i8, -1] {
        for s in sectors_up_to(eps, 6) {
            for n in 0..=5 {
                let a = energy_chain(&params, n, &s);
                let b = energy_printed(&params, n, &s);
                b_zero = b_zero.max((a.e_plus - b.e_plus).abs() / a.e_plus);
            }
        }
    }
    let mut classical = 0.0f64;
    let mut p = ModelParams::natural_units();
    p.mu1 = 1e-8;
    p.mu2 = 1e-8;
    for &b_field in &[0.0, 1.0] {
        p.b_field = b_field;
        let omega_eff = p.omega_eff();
        let base = p.hbar * p.m * omega_eff * p.c * p.c;
        for eps in [1i8, -1] {
            for s in sectors_up_to(eps, 6) {
                for n in 0..=4u32 {
                    let got = energy_chain(&p, n, &s);
                    let k0 = s.ell() + 0.5;
                    let lambda0 = s.branch.sign() * 2.0 * s.ell();
                    let e2 = 1.0
                        + base
                            * (4.0 * (f64::from(n) + k0) + 2.0 * (p.omega / omega_eff)
                                - p.magnetic_coefficient() * lambda0);
                    classical = classical.max((got.e_plus - e2.sqrt()).abs());
                }
            }
        }
    }
    // sector-independence of the non-magnetic shift at μ = 0
    let mut shift_consistency = 0.0f64;
    let mut p0 = ModelParams::natural_units();
    p0.mu1 = 1e-14;
    p0.mu2 = 1e-14;
    p0.b_field = 0.7;
    let shifts: Vec<f64> = [
        Sector::new(1, 1, 2, LambdaBranch::Plus).unwrap(),
        Sector::new(-1, -1, 2, LambdaBranch::Plus).unwrap(),
        Sector::new(-1, 1, 1, LambdaBranch::Plus).unwrap(),
        Sector::new(1, -1, 1, LambdaBranch::Plus).unwrap(),
    ]
    .iter()
    .map(|s| {
        crate::spectrum::e_tilde_shift(&p0, s)
            + p0.magnetic_coefficient() * crate::angular::angular_eigenvalue(s, p0.mu1, p0.mu2)
    })
    .collect();
    for w in shifts.windows(2) {
        shift_consistency = shift_consistency.max((w[0] - w[1]).abs());
    }
    SpectrumSuite {
        chain_vs_analytic,
        b_zero_agreement: b_zero,
        classical_reduction: classical,
        shift_consistency,
    }
}

/// Chain-vs-printed table over B in {0, 1} (plus the configured field), all
/// four reflection pairs, ℓ <= 2, n <= 2, both λ branches.
pub fn discrepancy_table(params: &ModelParams) -> Vec<DiscrepancyRow> {
    let mut fields = vec![0.0, 1.0];
    if params.b_field > 0.0 && params.b_field != 1.0 {
        fields.push(params.b_field);
    }
    let mut rows = Vec::new();
    for &b_field in &fields {
        let mut p = *params;
        p.b_field = b_field;
        for eps in [1i8, -1] {
            for s in sectors_up_to(eps, 4) {
                for n in 0..=2u32 {
                    let chain = energy_chain(&p, n, &s);
                    let printed = energy_printed(&p, n, &s);
                    rows.push(DiscrepancyRow {
                        b_field,
                        s1: s.s1,
                        s2: s.s2,
                        ell: s.ell(),
                        lambda_sign: s.branch.sign() as i8,
                        n,
                        e_plus_chain: chain.e_plus,
                        e_plus_printed: printed.e_plus,
                        delta_e_plus: (chain.e_plus - printed.e_plus).abs(),
                    });
                }
            }
        }
    }
    rows
}

/// Run every suite and assemble the report.
pub fn run_verification(params: &ModelParams, seed: u64) -> Result<VerificationReport> {
    let identities = run_identity_suite(seed, 50);
    let angular = run_angular_suite()?;
    let radial = run_radial_suite(seed)?;
    let oracle = run_oracle_suite()?;
    let spectrum = run_spectrum_suite();

    let factor_dev = max_f([
        (oracle.convergence_factor_lo - 4.0).abs(),
        (oracle.convergence_factor_hi - 4.0).abs(),
    ]);

    let required_checks = vec![
        CheckResult::new("dunkl_reflection_identities", identities.pro1, 1e-11),
        CheckResult::new("dunkl_heisenberg_identities", identities.pro2, 1e-11),
        CheckResult::new("dunkl_laplacian_commutation", identities.res1_res2, 1e-11),
        CheckResult::new("dunkl_radial_multiplier_commutation", identities.res3, 1e-11),
        CheckResult::new("j_annihilates_radial_polynomials", identities.j_radial, 1e-11),
        CheckResult::new("j_squared_cartesian_identity", identities.j_squared, 1e-11),
        CheckResult::new(
            "j_commutes_with_kinetic_magnetic_potential",
            identities.kinetic_commutator,
            1e-11,
        ),
        CheckResult::new(
            "product_reflection_commutes_with_hamiltonian",
            identities.product_reflection,
            1e-11,
        ),
        CheckResult::new(
            "j_commutator_matches_reflection_term_structure",
            identities.structure_match,
            1e-11,
        ),
        CheckResult::new(
            "single_reflections_commute_at_zero_field",
            identities.single_reflection_b0,
            1e-11,
        ),
        CheckResult::new(
            "polar_laplacian_consistency",
            identities.polar_consistency,
            1e-5,
        ),
        CheckResult::new("angular_eigen_equation", angular.eigen, 1e-6),
        CheckResult::new("angular_gram_identity", angular.gram, 1e-8),
        CheckResult::new("angular_j_squared_fd", angular.j_squared_fd, 1e-5),
        CheckResult::new("angular_classical_limit", angular.classical, 1e-6),
        CheckResult::new("su11_commutators", radial.commutators, 1e-11),
        CheckResult::new("su11_o0_eigenvalues", radial.o0_eigen, 1e-10),
        CheckResult::new("su11_ladder_coefficients", radial.ladder, 1e-10),
        CheckResult::new("su11_casimir", radial.casimir, 1e-10),
        CheckResult::new("radial_residual", radial.residual, 1e-10),
        CheckResult::new("centrifugal_equality", radial.centrifugal, 1e-12),
        CheckResult::new("radial_gram_identity", radial.gram, 1e-8),
        CheckResult::new("substitution_identity", radial.substitution, 1e-12),
        CheckResult::new("oracle_agreement", oracle.agreement, 5e-4),
        CheckResult::new("oracle_convergence_factor", factor_dev, 0.2),
        CheckResult::new("chain_matches_analytic_route", spectrum.chain_vs_analytic, 1e-12),
        CheckResult::new("b_zero_chain_equals_printed", spectrum.b_zero_agreement, 1e-12),
        CheckResult::new("classical_mu_limit_reduction", spectrum.classical_reduction, 1e-6),
        CheckResult::new("sector_shift_consistency_mu_zero", spectrum.shift_consistency, 1e-12),
    ];

    let k_case2 = bargmann_k(0.5, 0.3, 0.7);
    let findings = vec![
        Finding {
            id: "full_hamiltonian_commutation".into(),
            claim: "J commutes with the full oscillator Hamiltonian including its reflection term"
                .into(),
            status: "refuted".into(),
            measured: identities.full_commutator,
            note: format!(
                "J anticommutes with each single reflection, so the residual equals \
                 -4w(mu1 R1 + mu2 R2) J p exactly (structure deviation {:.2e}); it vanishes \
                 only for w = 0 (measured {:.2e}).",
                identities.structure_match, identities.kinetic_commutator
            ),
        },
        Finding {
            id: "single_reflection_commutation_in_field".into(),
            claim: "R1 and R2 individually commute with the Hamiltonian".into(),
            status: "refuted-for-nonzero-field".into(),
            measured: identities.single_reflection_b1,
            note: format!(
                "holds at B = 0 (measured {:.2e}); at B = 1 only the product R1 R2 survives \
                 (measured {:.2e}).",
                identities.single_reflection_b0, identities.product_reflection
            ),
        },
        Finding {
            id: "odd_class_level_constant".into(),
            claim: "the odd-parity class has (1/4) E-tilde' = n + 1".into(),
            status: "refuted".into(),
            measured: (k_case2 - 1.0).abs(),
            note: "the ladder derivation gives (1/4) E-tilde' = n + k with k = l + (1+mu1+mu2)/2; \
                   the printed constant matches only the special point l = 1/2, mu1 + mu2 = 0 \
                   (measured |k - 1| at l = 1/2, mu = (0.3, 0.7))."
                .into(),
        },
        Finding {
            id: "printed_magnetic_term".into(),
            claim: "the printed closed-form levels carry magnetic terms |e|B(l+mu1+mu2) and \
                    |e|B(l+mu1)(l+mu2) in place of the chain's |e|B lambda/4"
                .into(),
            status: "quantified".into(),
            measured: max_f(
                discrepancy_table(params)
                    .iter()
                    .filter(|r| r.b_field > 0.0)
                    .map(|r| r.delta_e_plus)
                    .filter(|d| d.is_finite()),
            ),
            note: "see paper_formula_discrepancy; deltas vanish identically at B = 0.".into(),
        },
    ];

    let paper_formula_discrepancy = discrepancy_table(params);
    let passed = required_checks.iter().all(|c| c.pass);
    Ok(VerificationReport {
        schema_version: REPORT_SCHEMA_VERSION.into(),
        seed,
        required_checks,
        findings,
        paper_formula_discrepancy,
        passed,
    })
}
