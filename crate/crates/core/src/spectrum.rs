//! Physical parameter model and assembly of the Landau-level energies.
//!
//! Two energy routes are kept side by side: `energy_chain` follows the
//! derivation chain (su(1,1) eigenvalue 4(n+k) plus the sector shift that
//! defines the dimensionless eigenvalue), while `energy_printed` evaluates
//! the closed final formulas exactly as printed in the source derivation.
//! The two agree at zero magnetic field and differ for B > 0, ℓ >= 1; the
//! verification report tabulates the difference rather than adjudicating.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angular::{angular_eigenvalue, AngularEigenfunction, Sector};
use crate::error::{Error, Result};
use crate::radial::{bargmann_k, e_tilde, radial_eigenfunction};

/// Physical constants and Dunkl parameters of one model instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub m: f64,
    pub c: f64,
    pub hbar: f64,
    pub omega: f64,
    #[serde(rename = "B")]
    pub b_field: f64,
    pub e_abs: f64,
    pub mu1: f64,
    pub mu2: f64,
}

impl ModelParams {
    pub fn validated(self) -> Result<Self> {
        let Self {
            m,
            c,
            hbar,
            omega,
            b_field,
            e_abs,
            mu1,
            mu2,
        } = self;
        if !(m > 0.0 && c > 0.0 && hbar > 0.0 && omega > 0.0) {
            return Err(Error::Params(
                "m, c, hbar and omega must be positive".into(),
            ));
        }
        if !(b_field >= 0.0) {
            return Err(Error::Params("B must be nonnegative".into()));
        }
        if !(e_abs > 0.0) {
            return Err(Error::Params("|e| must be positive".into()));
        }
        if !(mu1 > 0.0 && mu2 > 0.0) {
            return Err(Error::Params("mu1 and mu2 must be positive".into()));
        }
        Ok(self)
    }

    /// Natural units (m = c = ħ = ω = |e| = 1) with the default Dunkl
    /// parameters and no magnetic field.
    pub fn natural_units() -> Self {
        Self {
            m: 1.0,
            c: 1.0,
            hbar: 1.0,
            omega: 1.0,
            b_field: 0.0,
            e_abs: 1.0,
            mu1: 0.3,
            mu2: 0.7,
        }
    }

    /// Effective frequency Ω = sqrt(ω² + |e|²B²/(4m²c²)); Ω = ω exactly
    /// when the field vanishes.
    pub fn omega_eff(&self) -> f64 {
        let shift = self.e_abs * self.b_field / (2.0 * self.m * self.c);
        (self.omega * self.omega + shift * shift).sqrt()
    }

    /// Dimensionless magnetic coefficient |e|B/(ħ m Ω c) multiplying λ.
    pub fn magnetic_coefficient(&self) -> f64 {
        self.e_abs * self.b_field / (self.hbar * self.m * self.omega_eff() * self.c)
    }
}

/// Which route produced an energy record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EnergySource {
    #[serde(rename = "derivation-chain")]
    DerivationChain,
    #[serde(rename = "paper-verbatim")]
    PaperVerbatim,
}

impl std::fmt::Display for EnergySource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EnergySource::DerivationChain => write!(f, "derivation-chain"),
            EnergySource::PaperVerbatim => write!(f, "paper-verbatim"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecordStatus {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "negative-discriminant")]
    NegativeDiscriminant,
}

impl std::fmt::Display for RecordStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RecordStatus::Ok => write!(f, "ok"),
            RecordStatus::NegativeDiscriminant => write!(f, "negative-discriminant"),
        }
    }
}

/// One Landau level with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub n: u32,
    pub sector: Sector,
    pub lambda: f64,
    pub k: f64,
    pub e_tilde: f64,
    pub e_plus: f64,
    pub e_minus: f64,
    pub source: EnergySource,
    pub status: RecordStatus,
}

/// Expectation value of (1 + μ1 R1 + μ2 R2) on a reflection sector.
pub fn reflection_coefficient(sector: &Sector, mu1: f64, mu2: f64) -> f64 {
    1.0 + f64::from(sector.s1) * mu1 + f64::from(sector.s2) * mu2
}

/// The additive constant relating Ẽ to E²:
/// E² = m²c⁴ + ħ m Ω c² (Ẽ + shift) with
/// shift = 2(ω/Ω)(1 + s1 μ1 + s2 μ2) - (|e|B/(ħ m Ω c)) λ.
pub fn e_tilde_shift(params: &ModelParams, sector: &Sector) -> f64 {
    let omega_eff = params.omega_eff();
    let refl = reflection_coefficient(sector, params.mu1, params.mu2);
    let lambda = angular_eigenvalue(sector, params.mu1, params.mu2);
    2.0 * (params.omega / omega_eff) * refl - params.magnetic_coefficient() * lambda
}

fn record_from_e_squared(
    params: &ModelParams,
    n: u32,
    sector: &Sector,
    e_tilde_val: f64,
    e_squared: f64,
    source: EnergySource,
) -> SpectrumRecord {
    let (e_plus, e_minus, status) = if e_squared >= 0.0 {
        let e = e_squared.sqrt();
        (e, -e, RecordStatus::Ok)
    } else {
        (f64::NAN, f64::NAN, RecordStatus::NegativeDiscriminant)
    };
    SpectrumRecord {
        n,
        sector: *sector,
        lambda: angular_eigenvalue(sector, params.mu1, params.mu2),
        k: bargmann_k(sector.ell(), params.mu1, params.mu2),
        e_tilde: e_tilde_val,
        e_plus,
        e_minus,
        source,
        status,
    }
}

/// Energy record assembled along the derivation chain: Ẽ = 4(n + k) from
/// the ladder algebra, then E² = m²c⁴ + ħ m Ω c² (Ẽ + shift).
pub fn energy_chain(params: &ModelParams, n: u32, sector: &Sector) -> SpectrumRecord {
    let et = e_tilde(n, sector.ell(), params.mu1, params.mu2);
    let base = params.hbar * params.m * params.omega_eff() * params.c * params.c;
    let mc2 = params.m * params.c * params.c;
    let e_squared = mc2 * mc2 + base * (et + e_tilde_shift(params, sector));
    record_from_e_squared(params, n, sector, et, e_squared, EnergySource::DerivationChain)
}

/// Dimensionless eigenvalue along the analytic route,
/// Ẽ = 4n + 2 + sqrt((A-1)² + 4B) with A = 1 + 2μ1 + 2μ2 and
/// B = 4ℓ(ℓ+μ1+μ2); agrees with 4(n + k) identically.
pub fn e_tilde_analytic(n: u32, ell: f64, mu1: f64, mu2: f64) -> f64 {
    let a_coef = 1.0 + 2.0 * (mu1 + mu2);
    let b_coef = 4.0 * ell * (ell + mu1 + mu2);
    4.0 * f64::from(n) + 2.0 + ((a_coef - 1.0) * (a_coef - 1.0) + 4.0 * b_coef).sqrt()
}

/// Energy record from the final level formulas exactly as printed: the
/// magnetic term enters as -|e|B X/(ħ m Ω c) with X = ℓ + μ1 + μ2 for the
/// even-parity class and X = (ℓ+μ1)(ℓ+μ2) for the odd one, with no λ-branch
/// dependence. Kept verbatim for the discrepancy report.
pub fn energy_printed(params: &ModelParams, n: u32, sector: &Sector) -> SpectrumRecord {
    let omega_eff = params.omega_eff();
    let ratio = params.omega / omega_eff;
    let ell = sector.ell();
    let (mu1, mu2) = (params.mu1, params.mu2);
    let magnetic_x = if sector.epsilon() == 1 {
        ell + mu1 + mu2
    } else {
        (ell + mu1) * (ell + mu2)
    };
    let inner = f64::from(n)
        + ell
        + 0.5 * (1.0 + ratio)
        + 0.5 * mu1 * (1.0 + f64::from(sector.s1) * ratio)
        + 0.5 * mu2 * (1.0 + f64::from(sector.s2) * ratio)
        - params.magnetic_coefficient() * magnetic_x;
    let mc2 = params.m * params.c * params.c;
    let e_squared = mc2 * mc2 * (1.0 + 4.0 * params.hbar * omega_eff / mc2 * inner);
    // the implied dimensionless eigenvalue, backing the shift out of E²
    let base = params.hbar * params.m * omega_eff * params.c * params.c;
    let et = (e_squared - mc2 * mc2) / base - e_tilde_shift(params, sector);
    record_from_e_squared(params, n, sector, et, e_squared, EnergySource::PaperVerbatim)
}

/// Full separated wavefunction Ψ(ρ, φ) = s·R_nℓ(r(ρ))·F(φ) with
/// r = sqrt(mΩ/ħ)·ρ and s the Jacobian factor that normalizes Ψ under the
/// physical measure ρ^(1+2μ1+2μ2) |cos φ|^(2μ1) |sin φ|^(2μ2) dρ dφ.
pub fn wavefunction_eval(
    params: &ModelParams,
    n: u32,
    sector: &Sector,
    rho: f64,
    phi: f64,
) -> Result<Complex64> {
    if rho < 0.0 {
        return Err(Error::Domain(format!("rho = {rho} < 0")));
    }
    let scale_r = (params.m * params.omega_eff() / params.hbar).sqrt();
    let radial = radial_eigenfunction(n, sector.ell(), params.mu1, params.mu2)?;
    let angular = AngularEigenfunction::new(*sector, params.mu1, params.mu2)?;
    let jacobian = scale_r.powf(1.0 + params.mu1 + params.mu2);
    Ok(jacobian * radial.eval(scale_r * rho) * angular.eval(phi))
}

/// Deterministic ordering for emitted tables: sector lexicographic
/// (s1, s2, ℓ), then n, then λ branch, then source.
pub fn record_sort_key(r: &SpectrumRecord) -> (i8, i8, u32, u32, i8, EnergySource) {
    (
        r.sector.s1,
        r.sector.s2,
        r.sector.two_ell,
        r.n,
        match r.sector.branch {
            crate::angular::LambdaBranch::Minus => -1,
            crate::angular::LambdaBranch::Zero => 0,
            crate::angular::LambdaBranch::Plus => 1,
        },
        r.source,
    )
}

/// All records for the given sectors, n = 0..=n_max, both sources, in the
/// deterministic emission order.
pub fn enumerate_records(
    params: &ModelParams,
    n_max: u32,
    sectors: &[Sector],
) -> Vec<SpectrumRecord> {
    let mut out = Vec::new();
    for sector in sectors {
        for n in 0..=n_max {
            out.push(energy_chain(params, n, sector));
            out.push(energy_printed(params, n, sector));
        }
    }
    out.sort_by(|a, b| record_sort_key(a).partial_cmp(&record_sort_key(b)).unwrap());
    out
}
