//! Exact Dunkl calculus on bivariate polynomials.
//!
//! Reflections, Dunkl derivatives, the Dunkl Laplacian, the angular-momentum
//! operator J = i(x D2 - y D1) and the oscillator Hamiltonian all map
//! polynomials to polynomials, so every operator identity can be checked at
//! the level of coefficient maps with no discretization error. The factor i
//! in J is carried symbolically ([`TimesI`], [`ComplexPoly`]) so that all
//! stored coefficients stay real.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Dunkl deformation parameters, both strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DunklParams {
    pub mu1: f64,
    pub mu2: f64,
}

impl DunklParams {
    pub fn new(mu1: f64, mu2: f64) -> Result<Self> {
        if !(mu1 > 0.0 && mu2 > 0.0) {
            return Err(Error::Params(format!(
                "Dunkl parameters must be positive, got ({mu1}, {mu2})"
            )));
        }
        Ok(Self { mu1, mu2 })
    }

    pub fn mu(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.mu1,
            Axis::Y => self.mu2,
        }
    }
}

/// Coordinate axis selector for reflections and Dunkl derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Bivariate polynomial with a canonical sparse coefficient map
/// (no stored zero coefficients).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial2D {
    coeffs: BTreeMap<(u32, u32), f64>,
}

impl Polynomial2D {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(a: u32, b: u32, c: f64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0.0 {
            coeffs.insert((a, b), c);
        }
        Self { coeffs }
    }

    pub fn from_terms(terms: &[(u32, u32, f64)]) -> Self {
        let mut p = Self::zero();
        for &(a, b, c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &f64)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, a: u32, b: u32, c: f64) {
        if c == 0.0 {
            return;
        }
        let e = self.coeffs.entry((a, b)).or_insert(0.0);
        *e += c;
        if *e == 0.0 {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), &c) in &other.coeffs {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), &c) in &other.coeffs {
            out.add_term(a, b, -c);
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        if s == 0.0 {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, c * s)).collect(),
        }
    }

    /// Multiply by the monomial x^da y^db.
    pub fn mul_monomial(&self, da: u32, db: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), &c)| ((a + da, b + db), c))
                .collect(),
        }
    }

    /// Multiply by ρ² = x² + y².
    pub fn mul_rho2(&self) -> Self {
        self.mul_monomial(2, 0).add(&self.mul_monomial(0, 2))
    }

    /// Plain partial derivative along `axis`.
    pub fn partial(&self, axis: Axis) -> Self {
        let mut out = Self::zero();
        for (&(a, b), &c) in &self.coeffs {
            match axis {
                Axis::X if a > 0 => out.add_term(a - 1, b, c * f64::from(a)),
                Axis::Y if b > 0 => out.add_term(a, b - 1, c * f64::from(b)),
                _ => {}
            }
        }
        out
    }

    /// Reflection R1 (x -> -x) or R2 (y -> -y).
    pub fn reflect(&self, axis: Axis) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), &c)| {
                    let odd = match axis {
                        Axis::X => a % 2 == 1,
                        Axis::Y => b % 2 == 1,
                    };
                    ((a, b), if odd { -c } else { c })
                })
                .collect(),
        }
    }

    /// The reflection-difference part of the Dunkl derivative,
    /// (1 - R)/x_i, which maps x^a y^b to (1 - (-1)^a) x^(a-1) y^b.
    /// Even exponents (including a = 0) contribute nothing.
    pub fn reflection_difference(&self, axis: Axis) -> Self {
        let mut out = Self::zero();
        for (&(a, b), &c) in &self.coeffs {
            match axis {
                Axis::X if a % 2 == 1 => out.add_term(a - 1, b, 2.0 * c),
                Axis::Y if b % 2 == 1 => out.add_term(a, b - 1, 2.0 * c),
                _ => {}
            }
        }
        out
    }

    /// Dunkl derivative D_i = ∂_i + (μ_i / x_i)(1 - R_i), exact on
    /// coefficients.
    pub fn dunkl_derivative(&self, axis: Axis, params: &DunklParams) -> Self {
        self.partial(axis)
            .add(&self.reflection_difference(axis).scale(params.mu(axis)))
    }

    /// Dunkl Laplacian D1² + D2².
    pub fn dunkl_laplacian(&self, params: &DunklParams) -> Self {
        let dx = self
            .dunkl_derivative(Axis::X, params)
            .dunkl_derivative(Axis::X, params);
        let dy = self
            .dunkl_derivative(Axis::Y, params)
            .dunkl_derivative(Axis::Y, params);
        dx.add(&dy)
    }

    /// Euler operator x ∂x + y ∂y (diagonal on monomials: total degree).
    pub fn euler(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&(a, b), _)| a + b > 0)
                .map(|(&(a, b), &c)| ((a, b), c * f64::from(a + b)))
                .collect(),
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(&(a, b), &c)| c * x.powi(a as i32) * y.powi(b as i32))
            .sum()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient of the difference; the metric used by every
    /// "exact identity" test.
    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).max_abs_coeff()
    }
}

/// A polynomial known to carry an overall factor i: the stored value q
/// means i·q. Keeps J-related arithmetic real.
#[derive(Debug, Clone, PartialEq)]
pub struct TimesI(pub Polynomial2D);

/// Complex combination re + i·im of two real polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    pub re: Polynomial2D,
    pub im: Polynomial2D,
}

impl ComplexPoly {
    pub fn max_abs_coeff(&self) -> f64 {
        self.re.max_abs_coeff().max(self.im.max_abs_coeff())
    }
}

/// Real part of -iJ, i.e. the operator A = x D2 - y D1 with J = iA.
pub fn angular_momentum_real(p: &Polynomial2D, params: &DunklParams) -> Polynomial2D {
    let xd2 = p.dunkl_derivative(Axis::Y, params).mul_monomial(1, 0);
    let yd1 = p.dunkl_derivative(Axis::X, params).mul_monomial(0, 1);
    xd2.sub(&yd1)
}

/// J p = i·(x D2 - y D1) p with the factor i symbolic.
pub fn angular_momentum_apply(p: &Polynomial2D, params: &DunklParams) -> TimesI {
    TimesI(angular_momentum_real(p, params))
}

/// J² p = -(x D2 - y D1)² p; purely real.
pub fn j_squared_apply(p: &Polynomial2D, params: &DunklParams) -> Polynomial2D {
    angular_momentum_real(&angular_momentum_real(p, params), params).scale(-1.0)
}

/// The angular operator B_φ expressed through polynomial-preserving pieces:
/// B_φ = (E(E-1) + (1+2μ1+2μ2) E - ρ² ∇²_D)/2 with E the Euler operator.
/// This is the Cartesian form of the polar-decomposition remainder and is
/// exact on polynomials.
pub fn b_phi_apply(p: &Polynomial2D, params: &DunklParams) -> Polynomial2D {
    let a_coef = 1.0 + 2.0 * params.mu1 + 2.0 * params.mu2;
    let e = p.euler();
    let ee = e.euler().sub(&e); // E(E-1)
    let lap = p.dunkl_laplacian(params).mul_rho2();
    ee.add(&e.scale(a_coef)).sub(&lap).scale(0.5)
}

/// Dimensionless oscillator Hamiltonian
/// H = -∇²_D - i·b (x D2 - y D1) + ρ² + 2w (1 + μ1 R1 + μ2 R2),
/// with b the scaled magnetic field and w the scaled oscillator frequency.
#[derive(Debug, Clone, Copy)]
pub struct Hamiltonian {
    pub params: DunklParams,
    pub scaled_b: f64,
    pub scaled_omega: f64,
}

impl Hamiltonian {
    pub fn apply_real_part(&self, p: &Polynomial2D) -> Polynomial2D {
        let lap = p.dunkl_laplacian(&self.params).scale(-1.0);
        let pot = p.mul_rho2();
        let refl = p
            .add(&p.reflect(Axis::X).scale(self.params.mu1))
            .add(&p.reflect(Axis::Y).scale(self.params.mu2))
            .scale(2.0 * self.scaled_omega);
        lap.add(&pot).add(&refl)
    }

    /// H applied to a complex polynomial.
    pub fn apply(&self, p: &ComplexPoly) -> ComplexPoly {
        // H(u + iv) = (H_r u + b A v) + i (H_r v - b A u)
        let au = angular_momentum_real(&p.re, &self.params);
        let av = angular_momentum_real(&p.im, &self.params);
        ComplexPoly {
            re: self.apply_real_part(&p.re).add(&av.scale(self.scaled_b)),
            im: self.apply_real_part(&p.im).sub(&au.scale(self.scaled_b)),
        }
    }

    pub fn apply_to_real(&self, p: &Polynomial2D) -> ComplexPoly {
        self.apply(&ComplexPoly {
            re: p.clone(),
            im: Polynomial2D::zero(),
        })
    }
}

/// Residual of the constant-of-motion claim: J(H p) - H(J p).
///
/// The magnetic and polynomial pieces of H commute with J identically; the
/// reflection term does not (J anticommutes with each single reflection),
/// so the residual equals i·(-4w)(μ1 R1 + μ2 R2) A p. The returned value is
/// the full commutator, computed by composition.
pub fn j_commutator_residual(p: &Polynomial2D, h: &Hamiltonian) -> ComplexPoly {
    let hp = h.apply_to_real(p);
    // J(u + iv) = -A v + i A u
    let j_hp = ComplexPoly {
        re: angular_momentum_real(&hp.im, &h.params).scale(-1.0),
        im: angular_momentum_real(&hp.re, &h.params),
    };
    let jp = ComplexPoly {
        re: Polynomial2D::zero(),
        im: angular_momentum_real(p, &h.params),
    };
    let h_jp = h.apply(&jp);
    ComplexPoly {
        re: j_hp.re.sub(&h_jp.re),
        im: j_hp.im.sub(&h_jp.im),
    }
}

/// Residual of [R, H] p for a reflection (or the product reflection).
pub fn reflection_commutator_residual(
    p: &Polynomial2D,
    h: &Hamiltonian,
    axes: &[Axis],
) -> ComplexPoly {
    let refl = |q: &Polynomial2D| {
        let mut out = q.clone();
        for &ax in axes {
            out = out.reflect(ax);
        }
        out
    };
    let hp = h.apply_to_real(p);
    let r_hp = ComplexPoly {
        re: refl(&hp.re),
        im: refl(&hp.im),
    };
    let h_rp = h.apply_to_real(&refl(p));
    ComplexPoly {
        re: r_hp.re.sub(&h_rp.re),
        im: r_hp.im.sub(&h_rp.im),
    }
}

/// Deterministic family of dense random polynomials used by the identity
/// suites; coefficients are uniform in [-1, 1] over all monomials of total
/// degree <= `max_degree`.
pub fn seeded_polynomials(seed: u64, count: usize, max_degree: u32) -> Vec<Polynomial2D> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p = Polynomial2D::zero();
            for a in 0..=max_degree {
                for b in 0..=(max_degree - a) {
                    p.add_term(a, b, rng.gen_range(-1.0..1.0));
                }
            }
            p
        })
        .collect()
}

fn axis_distance(phi: f64) -> f64 {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let r = (phi % half_pi + half_pi) % half_pi;
    r.min(half_pi - r)
}

/// Central difference with one Richardson step: O(h^4) first derivative.
fn fd1<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

/// Second central difference with one Richardson step: O(h^4).
fn fd2<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

/// Cross-check of the polar split of the Dunkl Laplacian and of the
/// J² = 2 B_φ + 2 μ1 μ2 (1 - R1 R2) identity at sample points.
///
/// The Cartesian coefficient-level values serve as the oracle; the polar
/// side is assembled from finite differences in (ρ, φ) with `fd_step` and
/// Richardson extrapolation. Returns the largest pointwise deviation of
/// either check.
pub fn polar_laplacian_consistency(
    p: &Polynomial2D,
    params: &DunklParams,
    samples: &[(f64, f64)],
    fd_step: f64,
) -> Result<f64> {
    for &(rho, phi) in samples {
        if rho <= 0.0 {
            return Err(Error::SingularSample(format!("rho = {rho} <= 0")));
        }
        if axis_distance(phi) < 1e-3 {
            return Err(Error::SingularSample(format!(
                "phi = {phi} within 1e-3 of an axis angle"
            )));
        }
    }
    let a_coef = 1.0 + 2.0 * params.mu1 + 2.0 * params.mu2;
    let lap = p.dunkl_laplacian(params);
    let jsq = j_squared_apply(p, params);
    let mu1 = params.mu1;
    let mu2 = params.mu2;
    let at = |rho: f64, phi: f64| p.eval(rho * phi.cos(), rho * phi.sin());

    // B_φ assembled from finite differences; reflections are exact
    // evaluations at the reflected angles.
    let b_phi_fd = |rho: f64, phi: f64| {
        let g = |ph: f64| at(rho, ph);
        let d2 = fd2(&g, phi, fd_step);
        let d1 = fd1(&g, phi, fd_step);
        let f = at(rho, phi);
        let r1 = at(rho, std::f64::consts::PI - phi);
        let r2 = at(rho, -phi);
        -0.5 * d2 + (mu1 * phi.tan() - mu2 / phi.tan()) * d1
            + mu1 * (f - r1) / (2.0 * phi.cos().powi(2))
            + mu2 * (f - r2) / (2.0 * phi.sin().powi(2))
    };

    let mut worst = 0.0f64;
    for &(rho, phi) in samples {
        // polar Laplacian: ∂ρ² + ((1+2μ1+2μ2)/ρ) ∂ρ - (2/ρ²) B_φ
        let radial = |r: f64| at(r, phi);
        let polar = fd2(&radial, rho, fd_step) + a_coef / rho * fd1(&radial, rho, fd_step)
            - 2.0 / (rho * rho) * b_phi_fd(rho, phi);
        let cart = lap.eval(rho * phi.cos(), rho * phi.sin());
        worst = worst.max((polar - cart).abs());

        // J² identity at the same point
        let f = at(rho, phi);
        let r1r2 = at(rho, phi + std::f64::consts::PI);
        let rhs = 2.0 * b_phi_fd(rho, phi) + 2.0 * mu1 * mu2 * (f - r1r2);
        let lhs = jsq.eval(rho * phi.cos(), rho * phi.sin());
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}
