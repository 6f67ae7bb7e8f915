//! Angular sector bookkeeping and the eigenfunctions of the Dunkl angular
//! momentum J on the circle.
//!
//! Total parity ε = s1·s2 splits the problem in two: ε = +1 carries integer
//! angular numbers ℓ and mixes the (++)/(--) reflection components, ε = -1
//! carries half-odd ℓ and mixes (-+)/(+-). Within a parity class J acts as
//! an off-diagonal 2x2 block, so its eigenfunctions are the combinations
//! Φ_a ± iΦ_b; the sign pairing between the λ branch and the imaginary
//! component is fixed by the eigenvalue equation itself (see
//! `CASE_A_PAIRING` / `CASE_B_PAIRING`) and regression-tested.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{gauss_legendre, integrate_graded, jacobi_eval, ln_gamma};

/// Which λ branch a sector refers to. `Zero` is reserved for ℓ = 0 in the
/// ε = +1 class, where a single state with λ = 0 exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum LambdaBranch {
    Minus,
    Zero,
    Plus,
}

impl LambdaBranch {
    pub fn sign(self) -> f64 {
        match self {
            LambdaBranch::Minus => -1.0,
            LambdaBranch::Zero => 0.0,
            LambdaBranch::Plus => 1.0,
        }
    }
}

/// Reflection sector: eigenvalues (s1, s2) of R1, R2, the angular quantum
/// number ℓ (stored doubled so half-odd values stay exact), and the λ
/// branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Sector {
    pub s1: i8,
    pub s2: i8,
    pub two_ell: u32,
    pub branch: LambdaBranch,
}

impl Sector {
    pub fn new(s1: i8, s2: i8, two_ell: u32, branch: LambdaBranch) -> Result<Self> {
        if !(s1 == 1 || s1 == -1) || !(s2 == 1 || s2 == -1) {
            return Err(Error::InvalidSector(format!(
                "reflection eigenvalues must be ±1, got ({s1}, {s2})"
            )));
        }
        let epsilon = s1 * s2;
        if epsilon == 1 && two_ell % 2 != 0 {
            return Err(Error::InvalidSector(format!(
                "ε = +1 requires integer ℓ, got ℓ = {}/2",
                two_ell
            )));
        }
        if epsilon == -1 && two_ell % 2 != 1 {
            return Err(Error::InvalidSector(format!(
                "ε = -1 requires half-odd ℓ, got ℓ = {}",
                two_ell / 2
            )));
        }
        if two_ell == 0 && branch != LambdaBranch::Zero {
            return Err(Error::InvalidSector(
                "ℓ = 0 admits only the λ = 0 state".into(),
            ));
        }
        if two_ell > 0 && branch == LambdaBranch::Zero {
            return Err(Error::InvalidSector(
                "λ = 0 branch is reserved for ℓ = 0".into(),
            ));
        }
        Ok(Self {
            s1,
            s2,
            two_ell,
            branch,
        })
    }

    pub fn epsilon(&self) -> i8 {
        self.s1 * self.s2
    }

    pub fn ell(&self) -> f64 {
        f64::from(self.two_ell) / 2.0
    }
}

/// λ eigenvalue of J for a sector: ±2√(ℓ(ℓ+μ1+μ2)) for ε = +1 and
/// ±2√((ℓ+μ1)(ℓ+μ2)) for ε = -1.
pub fn angular_eigenvalue(sector: &Sector, mu1: f64, mu2: f64) -> f64 {
    let ell = sector.ell();
    let magnitude = if sector.epsilon() == 1 {
        2.0 * (ell * (ell + mu1 + mu2)).sqrt()
    } else {
        2.0 * ((ell + mu1) * (ell + mu2)).sqrt()
    };
    sector.branch.sign() * magnitude
}

/// Reflection signature of one component eigenfunction Φ^(s1 s2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiKind {
    PlusPlus,
    MinusMinus,
    MinusPlus,
    PlusMinus,
}

#[derive(Debug, Clone, Copy)]
enum Trig {
    One,
    SinCos,
    Cos,
    Sin,
}

/// Precomputed evaluator for one Φ component: normalization prefactor plus
/// the Jacobi polynomial data in the variable x = -cos 2φ.
#[derive(Debug, Clone, Copy)]
pub struct PhiSpec {
    prefactor: f64,
    degree: i32,
    alpha: f64,
    beta: f64,
    trig: Trig,
}

impl PhiSpec {
    pub fn eval(&self, phi: f64) -> f64 {
        if self.degree < 0 {
            return 0.0;
        }
        let x = -(2.0 * phi).cos();
        let trig = match self.trig {
            Trig::One => 1.0,
            Trig::SinCos => phi.sin() * phi.cos(),
            Trig::Cos => phi.cos(),
            Trig::Sin => phi.sin(),
        };
        self.prefactor * trig * jacobi_eval(self.degree, self.alpha, self.beta, x).unwrap()
    }
}

/// Build the evaluator for Φ^kind_ℓ. ℓ must be integer for the diagonal
/// kinds and half-odd for the mixed ones; μ1, μ2 >= 0 (the classical limit
/// μ -> 0 is reachable).
pub fn phi_spec(kind: PhiKind, two_ell: u32, mu1: f64, mu2: f64) -> Result<PhiSpec> {
    if mu1 < 0.0 || mu2 < 0.0 {
        return Err(Error::Domain("phi_spec requires mu1, mu2 >= 0".into()));
    }
    let diagonal = matches!(kind, PhiKind::PlusPlus | PhiKind::MinusMinus);
    if diagonal && two_ell % 2 != 0 {
        return Err(Error::InvalidSector(
            "Φ^(±±) requires integer ℓ".into(),
        ));
    }
    if !diagonal && two_ell % 2 != 1 {
        return Err(Error::InvalidSector(
            "Φ^(∓±) requires half-odd ℓ".into(),
        ));
    }
    let ell = f64::from(two_ell) / 2.0;
    let m = mu1 + mu2;
    // Φ_0^(--) vanishes identically (degree -1 polynomial).
    if kind == PhiKind::MinusMinus && two_ell == 0 {
        return Ok(PhiSpec {
            prefactor: 0.0,
            degree: -1,
            alpha: mu1 + 0.5,
            beta: mu2 + 0.5,
            trig: Trig::SinCos,
        });
    }
    // ln of the squared prefactor, then exp(0.5·…).
    let ln_pref_sq = match kind {
        PhiKind::PlusPlus => {
            // (2ℓ+m)Γ(ℓ+m) ℓ! / (2 Γ(ℓ+μ1+1/2) Γ(ℓ+μ2+1/2)); at ℓ = 0 the
            // product m·Γ(m) is written as Γ(m+1) so μ -> 0 stays finite.
            let num = if two_ell == 0 {
                ln_gamma(m + 1.0)?
            } else {
                (2.0 * ell + m).ln() + ln_gamma(ell + m)?
            };
            num + ln_gamma(ell + 1.0)?
                - 2f64.ln()
                - ln_gamma(ell + mu1 + 0.5)?
                - ln_gamma(ell + mu2 + 0.5)?
        }
        PhiKind::MinusMinus => {
            (2.0 * ell + m).ln() + ln_gamma(ell + m + 1.0)? + ln_gamma(ell)?
                - 2f64.ln()
                - ln_gamma(ell + mu1 + 0.5)?
                - ln_gamma(ell + mu2 + 0.5)?
        }
        PhiKind::MinusPlus => {
            (2.0 * ell + m).ln() + ln_gamma(ell + m + 0.5)? + ln_gamma(ell + 0.5)?
                - 2f64.ln()
                - ln_gamma(ell + mu1 + 1.0)?
                - ln_gamma(ell + mu2)?
        }
        PhiKind::PlusMinus => {
            (2.0 * ell + m).ln() + ln_gamma(ell + m + 0.5)? + ln_gamma(ell + 0.5)?
                - 2f64.ln()
                - ln_gamma(ell + mu1)?
                - ln_gamma(ell + mu2 + 1.0)?
        }
    };
    let (degree, alpha, beta, trig) = match kind {
        PhiKind::PlusPlus => (two_ell as i32 / 2, mu1 - 0.5, mu2 - 0.5, Trig::One),
        PhiKind::MinusMinus => (two_ell as i32 / 2 - 1, mu1 + 0.5, mu2 + 0.5, Trig::SinCos),
        PhiKind::MinusPlus => ((two_ell as i32 - 1) / 2, mu1 + 0.5, mu2 - 0.5, Trig::Cos),
        PhiKind::PlusMinus => ((two_ell as i32 - 1) / 2, mu1 - 0.5, mu2 + 0.5, Trig::Sin),
    };
    Ok(PhiSpec {
        prefactor: (0.5 * ln_pref_sq).exp(),
        degree,
        alpha,
        beta,
        trig,
    })
}

pub fn phi_eval(kind: PhiKind, two_ell: u32, mu1: f64, mu2: f64, phi: f64) -> Result<f64> {
    Ok(phi_spec(kind, two_ell, mu1, mu2)?.eval(phi))
}

/// Sign pairing fixed by the eigenvalue equation: for ε = +1,
/// F = (Φ^(++) + i·sgn λ·Φ^(--))/√2 satisfies J F = λ F.
pub const CASE_A_PAIRING: f64 = 1.0;
/// For ε = -1 the pairing is reversed: F = (Φ^(-+) - i·sgn λ·Φ^(+-))/√2.
pub const CASE_B_PAIRING: f64 = -1.0;

/// Normalized evaluator for the J eigenfunction of a sector.
#[derive(Debug, Clone, Copy)]
pub struct AngularEigenfunction {
    pub sector: Sector,
    pub mu1: f64,
    pub mu2: f64,
    pub lambda: f64,
    comp_a: PhiSpec,
    comp_b: PhiSpec,
}

impl AngularEigenfunction {
    pub fn new(sector: Sector, mu1: f64, mu2: f64) -> Result<Self> {
        let lambda = angular_eigenvalue(&sector, mu1, mu2);
        let (comp_a, comp_b, pairing) = if sector.epsilon() == 1 {
            (
                phi_spec(PhiKind::PlusPlus, sector.two_ell, mu1, mu2)?,
                phi_spec(PhiKind::MinusMinus, sector.two_ell, mu1, mu2)?,
                CASE_A_PAIRING,
            )
        } else {
            (
                phi_spec(PhiKind::MinusPlus, sector.two_ell, mu1, mu2)?,
                phi_spec(PhiKind::PlusMinus, sector.two_ell, mu1, mu2)?,
                CASE_B_PAIRING,
            )
        };
        // ℓ = 0 keeps the single real component with unit norm (comp_b is
        // identically zero there); every other sector splits its norm
        // evenly between the two components, with the branch sign folded
        // into the imaginary one.
        let mut comp_a = comp_a;
        let mut comp_b = comp_b;
        if sector.two_ell > 0 {
            let norm = std::f64::consts::FRAC_1_SQRT_2;
            comp_a.prefactor *= norm;
            comp_b.prefactor *= norm * pairing * sector.branch.sign();
        }
        Ok(Self {
            sector,
            mu1,
            mu2,
            lambda,
            comp_a,
            comp_b,
        })
    }

    pub fn eval(&self, phi: f64) -> Complex64 {
        Complex64::new(self.comp_a.eval(phi), self.comp_b.eval(phi))
    }
}

pub fn f_eval(sector: &Sector, mu1: f64, mu2: f64, phi: f64) -> Result<Complex64> {
    Ok(AngularEigenfunction::new(*sector, mu1, mu2)?.eval(phi))
}

fn axis_distance(phi: f64) -> f64 {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let r = (phi % half_pi + half_pi) % half_pi;
    r.min(half_pi - r)
}

fn fd1_c<F: Fn(f64) -> Complex64>(f: &F, x: f64, h: f64) -> Complex64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

fn fd2_c<F: Fn(f64) -> Complex64>(f: &F, x: f64, h: f64) -> Complex64 {
    let d = |h: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

/// Numeric application of J = i(∂φ + μ2 cot φ (1 - R2) - μ1 tan φ (1 - R1))
/// at one angle. ∂φ uses central differences with Richardson extrapolation
/// (O(h^4)); the reflected values are exact evaluations of `f`.
pub fn j_apply_numeric<F: Fn(f64) -> Complex64>(
    f: &F,
    phi: f64,
    mu1: f64,
    mu2: f64,
    step: f64,
) -> Result<Complex64> {
    if axis_distance(phi) < 1e-3 {
        return Err(Error::SingularSample(format!(
            "phi = {phi} within 1e-3 of an axis angle"
        )));
    }
    let fp = f(phi);
    let refl2 = fp - f(-phi);
    let refl1 = fp - f(std::f64::consts::PI - phi);
    let val = fd1_c(f, phi, step) + mu2 / phi.tan() * refl2 - mu1 * phi.tan() * refl1;
    Ok(Complex64::new(0.0, 1.0) * val)
}

/// B_φ applied numerically with the same stencil as `j_apply_numeric`.
pub fn b_phi_numeric<F: Fn(f64) -> Complex64>(
    f: &F,
    phi: f64,
    mu1: f64,
    mu2: f64,
    step: f64,
) -> Result<Complex64> {
    if axis_distance(phi) < 1e-3 {
        return Err(Error::SingularSample(format!(
            "phi = {phi} within 1e-3 of an axis angle"
        )));
    }
    let fp = f(phi);
    let r1 = f(std::f64::consts::PI - phi);
    let r2 = f(-phi);
    Ok(-0.5 * fd2_c(f, phi, step)
        + (mu1 * phi.tan() - mu2 / phi.tan()) * fd1_c(f, phi, step)
        + mu1 * (fp - r1) / (2.0 * phi.cos().powi(2))
        + mu2 * (fp - r2) / (2.0 * phi.sin().powi(2)))
}

/// Uniform grid on [0, 2π) with nodes closer than `margin` to an axis angle
/// dropped.
pub fn angular_grid(n: usize, margin: f64) -> Vec<f64> {
    let two_pi = 2.0 * std::f64::consts::PI;
    (0..n)
        .map(|i| two_pi * (i as f64 + 0.5) / n as f64)
        .filter(|&phi| axis_distance(phi) >= margin)
        .collect()
}

/// Relative sup-norm residual ‖J F - λ F‖∞ / ‖F‖∞ over a grid.
pub fn eigen_residual(
    sector: &Sector,
    mu1: f64,
    mu2: f64,
    grid: &[f64],
    step: f64,
) -> Result<f64> {
    let state = AngularEigenfunction::new(*sector, mu1, mu2)?;
    let f = |phi: f64| state.eval(phi);
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &phi in grid {
        let jf = j_apply_numeric(&f, phi, mu1, mu2, step)?;
        let fv = f(phi);
        worst = worst.max((jf - state.lambda * fv).norm());
        scale = scale.max(fv.norm());
    }
    Ok(worst / scale.max(f64::MIN_POSITIVE))
}

/// Pointwise residual of J² = 2 B_φ + 2 μ1 μ2 (1 - R1 R2) with both sides
/// built from the same finite-difference scheme.
pub fn j_squared_residual(
    sector: &Sector,
    mu1: f64,
    mu2: f64,
    grid: &[f64],
    step: f64,
) -> Result<f64> {
    let state = AngularEigenfunction::new(*sector, mu1, mu2)?;
    let f = move |phi: f64| state.eval(phi);
    let jf = move |phi: f64| j_apply_numeric(&f, phi, mu1, mu2, step).unwrap();
    let mut worst = 0.0f64;
    for &phi in grid {
        let jjf = j_apply_numeric(&jf, phi, mu1, mu2, step)?;
        let rhs = 2.0 * b_phi_numeric(&f, phi, mu1, mu2, step)?
            + 2.0 * mu1 * mu2 * (f(phi) - f(phi + std::f64::consts::PI));
        worst = worst.max((jjf - rhs).norm());
    }
    Ok(worst)
}

/// Weighted inner product ∫ conj(F_A) F_B |cos φ|^(2μ1) |sin φ|^(2μ2) dφ
/// over [0, 2π), by quadrant-wise quadrature graded into the axis angles.
pub fn angular_norm(a: &Sector, b: &Sector, mu1: f64, mu2: f64) -> Result<Complex64> {
    let fa = AngularEigenfunction::new(*a, mu1, mu2)?;
    let fb = AngularEigenfunction::new(*b, mu1, mu2)?;
    let rule = gauss_legendre(16).unwrap();
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut total = Complex64::new(0.0, 0.0);
    for q in 0..4 {
        let lo = half_pi * q as f64;
        let hi = half_pi * (q + 1) as f64;
        for part in [0, 1] {
            let f = |phi: f64| {
                let w = phi.cos().abs().powf(2.0 * mu1) * phi.sin().abs().powf(2.0 * mu2);
                let v = fa.eval(phi).conj() * fb.eval(phi) * w;
                if part == 0 {
                    v.re
                } else {
                    v.im
                }
            };
            let val = integrate_graded(f, lo, hi, true, true, 44, &rule);
            if part == 0 {
                total.re += val;
            } else {
                total.im += val;
            }
        }
    }
    Ok(total)
}

/// Largest deviation of the Gram matrix of `sectors` from the identity.
pub fn gram_deviation(sectors: &[Sector], mu1: f64, mu2: f64) -> Result<f64> {
    let mut worst = 0.0f64;
    for (i, a) in sectors.iter().enumerate() {
        for b in &sectors[i..] {
            let g = angular_norm(a, b, mu1, mu2)?;
            let want = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((g - want).norm());
        }
    }
    Ok(worst)
}

/// The distinct J eigenfunctions of one parity class with ℓ <= ell_max:
/// one state per (ℓ, λ branch). The (s1, s2) pair within a class labels the
/// reflection components and the energy shift, not the eigenfunction, so a
/// single representative pair is used.
pub fn angular_states_up_to(epsilon: i8, two_ell_max: u32) -> Vec<Sector> {
    let (s1, s2, start) = if epsilon == 1 { (1i8, 1i8, 0u32) } else { (-1, 1, 1) };
    let mut out = Vec::new();
    let mut two_ell = start;
    while two_ell <= two_ell_max {
        if two_ell == 0 {
            out.push(Sector::new(s1, s2, 0, LambdaBranch::Zero).unwrap());
        } else {
            out.push(Sector::new(s1, s2, two_ell, LambdaBranch::Plus).unwrap());
            out.push(Sector::new(s1, s2, two_ell, LambdaBranch::Minus).unwrap());
        }
        two_ell += 2;
    }
    out
}

/// All sectors of one parity class with ℓ <= `ell_max` (both λ branches).
pub fn sectors_up_to(epsilon: i8, two_ell_max: u32) -> Vec<Sector> {
    let mut out = Vec::new();
    let (s1s2, start, step) = if epsilon == 1 {
        ([(1i8, 1i8), (-1, -1)], 0u32, 2u32)
    } else {
        ([(-1, 1), (1, -1)], 1, 2)
    };
    let mut two_ell = start;
    while two_ell <= two_ell_max {
        for &(s1, s2) in &s1s2 {
            if two_ell == 0 {
                // single state; emitted once under (+1, +1)
                if (s1, s2) == (1, 1) {
                    out.push(Sector::new(s1, s2, 0, LambdaBranch::Zero).unwrap());
                }
            } else {
                out.push(Sector::new(s1, s2, two_ell, LambdaBranch::Plus).unwrap());
                out.push(Sector::new(s1, s2, two_ell, LambdaBranch::Minus).unwrap());
            }
        }
        two_ell += step;
    }
    out
}
