//! Independent numerical eigenvalue oracle.
//!
//! The transformed radial equation -G'' + [r² + (α²-1/4)/r²] G = ℰ G with
//! Dirichlet walls is discretized with the standard 3-point stencil and the
//! lowest eigenvalues of the resulting symmetric tridiagonal matrix are
//! extracted by Sturm-sequence bisection. No linear-algebra dependencies:
//! the Sturm count is an LDLᵀ pivot count and the bisection brackets come
//! from Gershgorin disks, so every step is individually testable.

use serde::Serialize;

use crate::angular::Sector;
use crate::error::{Error, Result};
use crate::spectrum::{e_tilde_shift, energy_chain, energy_printed, ModelParams};

/// Uniform grid on [r_min, r_max] with Dirichlet conditions at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n_points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        if n_points < 500 {
            return Err(Error::Grid(format!("n_points = {n_points} < 500")));
        }
        if !(r_max >= 12.0) {
            return Err(Error::Grid(format!(
                "r_max = {r_max} < 12 does not cover the Gaussian tail"
            )));
        }
        if !(r_min > 0.0 && r_min < r_max) {
            return Err(Error::Grid(format!("invalid range [{r_min}, {r_max}]")));
        }
        let grid = Self {
            r_min,
            r_max,
            n_points,
        };
        if r_min < 0.5 * grid.spacing() {
            return Err(Error::Grid(format!(
                "r_min = {r_min} below half a grid spacing {}",
                grid.spacing()
            )));
        }
        Ok(grid)
    }

    /// The default verification grid: r_min = 1e-3, r_max = 14, N = 8000.
    pub fn default_oracle() -> Self {
        Self::new(1e-3, 14.0, 8000).unwrap()
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points as f64 - 1.0)
    }

    /// Grid with the spacing halved on the same interval.
    pub fn refined(&self) -> Self {
        Self {
            r_min: self.r_min,
            r_max: self.r_max,
            n_points: 2 * self.n_points - 1,
        }
    }
}

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn order(&self) -> usize {
        self.diagonal.len()
    }
}

/// 3-point discretization of -G'' + [r² + (α²-1/4)/r²] G over the interior
/// nodes of `grid` (the walls carry G = 0).
pub fn discretize_g_equation(alpha: f64, grid: &RadialGrid) -> Result<TridiagonalMatrix> {
    if alpha < 0.0 {
        return Err(Error::Domain(format!("alpha = {alpha} < 0")));
    }
    let h = grid.spacing();
    let n = grid.n_points - 2;
    let centrifugal = alpha * alpha - 0.25;
    let mut diagonal = Vec::with_capacity(n);
    for i in 1..=n {
        let r = grid.r_min + h * i as f64;
        diagonal.push(2.0 / (h * h) + r * r + centrifugal / (r * r));
    }
    Ok(TridiagonalMatrix {
        diagonal,
        off_diagonal: vec![-1.0 / (h * h); n - 1],
    })
}

/// Number of eigenvalues strictly below `shift`, via the signs of the LDLᵀ
/// pivots (Sturm sequence).
pub fn sturm_count(m: &TridiagonalMatrix, shift: f64) -> usize {
    let n = m.order();
    if n == 0 {
        return 0;
    }
    // keeps q away from zero so the e²/q division stays finite
    let guard = m
        .off_diagonal
        .iter()
        .fold(f64::MIN_POSITIVE, |g, e| g.max(e * e * 1e-32));
    let mut count = 0usize;
    let mut q = m.diagonal[0] - shift;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        if q.abs() < guard {
            q = if q < 0.0 { -guard } else { guard };
        }
        let e = m.off_diagonal[i - 1];
        q = (m.diagonal[i] - shift) - e * e / q;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `count` smallest eigenvalues by bisection inside the Gershgorin
/// bracket, each resolved to an absolute width of 1e-10.
pub fn tridiag_eigenvalues(m: &TridiagonalMatrix, count: usize) -> Result<Vec<f64>> {
    let n = m.order();
    if count > n {
        return Err(Error::Domain(format!(
            "requested {count} eigenvalues of an order-{n} matrix"
        )));
    }
    let mut lo_all = f64::INFINITY;
    let mut hi_all = f64::NEG_INFINITY;
    for i in 0..n {
        let mut radius = 0.0;
        if i > 0 {
            radius += m.off_diagonal[i - 1].abs();
        }
        if i + 1 < n {
            radius += m.off_diagonal[i].abs();
        }
        lo_all = lo_all.min(m.diagonal[i] - radius);
        hi_all = hi_all.max(m.diagonal[i] + radius);
    }
    let tol = 1e-10;
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let (mut lo, mut hi) = (lo_all, hi_all);
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break; // interval at floating-point resolution
            }
            if sturm_count(m, mid) >= k + 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

/// Lowest `n_levels` eigenvalues of the G-equation for α = 2ℓ + μ1 + μ2.
pub fn oracle_spectrum(
    ell: f64,
    mu1: f64,
    mu2: f64,
    n_levels: usize,
    grid: &RadialGrid,
) -> Result<Vec<f64>> {
    let alpha = 2.0 * ell + mu1 + mu2;
    let m = discretize_g_equation(alpha, grid)?;
    tridiag_eigenvalues(&m, n_levels)
}

/// Spectrum plus a convergence measure: the largest eigenvalue shift under
/// halving the spacing. A shift above 1e-4 means the grid is too coarse for
/// the requested levels.
pub fn oracle_spectrum_checked(
    ell: f64,
    mu1: f64,
    mu2: f64,
    n_levels: usize,
    grid: &RadialGrid,
) -> Result<(Vec<f64>, f64)> {
    let coarse = oracle_spectrum(ell, mu1, mu2, n_levels, grid)?;
    let fine = oracle_spectrum(ell, mu1, mu2, n_levels, &grid.refined())?;
    let max_shift = coarse
        .iter()
        .zip(&fine)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    Ok((fine, max_shift))
}

/// One row of the oracle/closed-form comparison.
#[derive(Debug, Clone, Serialize)]
pub struct OracleComparisonRow {
    pub n: u32,
    pub oracle_e_tilde: f64,
    pub chain_e_tilde: f64,
    pub oracle_e_plus: f64,
    pub chain_e_plus: f64,
    pub printed_e_plus: f64,
    pub chain_deviation: f64,
    pub printed_deviation: f64,
}

/// Convert oracle eigenvalues to energies through the sector shift and
/// tabulate the deviation of both closed-form routes.
pub fn oracle_vs_chain(
    params: &ModelParams,
    sector: &Sector,
    n_levels: usize,
    grid: &RadialGrid,
) -> Result<Vec<OracleComparisonRow>> {
    let levels = oracle_spectrum(sector.ell(), params.mu1, params.mu2, n_levels, grid)?;
    let base = params.hbar * params.m * params.omega_eff() * params.c * params.c;
    let mc2 = params.m * params.c * params.c;
    let shift = e_tilde_shift(params, sector);
    let mut rows = Vec::with_capacity(n_levels);
    for (n, &oracle_e_tilde) in levels.iter().enumerate() {
        let e2 = mc2 * mc2 + base * (oracle_e_tilde + shift);
        let oracle_e_plus = if e2 >= 0.0 { e2.sqrt() } else { f64::NAN };
        let chain = energy_chain(params, n as u32, sector);
        let printed = energy_printed(params, n as u32, sector);
        rows.push(OracleComparisonRow {
            n: n as u32,
            oracle_e_tilde,
            chain_e_tilde: chain.e_tilde,
            oracle_e_plus,
            chain_e_plus: chain.e_plus,
            printed_e_plus: printed.e_plus,
            chain_deviation: (chain.e_plus - oracle_e_plus).abs(),
            printed_deviation: (printed.e_plus - oracle_e_plus).abs(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::LambdaBranch;

    #[test]
    fn grid_validation() {
        assert!(RadialGrid::new(1e-3, 14.0, 8000).is_ok());
        assert!(RadialGrid::new(1e-3, 14.0, 400).is_err());
        assert!(RadialGrid::new(1e-3, 10.0, 8000).is_err());
        assert!(RadialGrid::new(0.0, 14.0, 8000).is_err());
        // r_min below h/2
        assert!(RadialGrid::new(1e-5, 14.0, 600).is_err());
    }

    #[test]
    fn dirichlet_laplacian_closed_form() {
        // pure -G'' on m interior nodes: eigenvalues (2/h²)(1 - cos(kπ/(m+1)))
        let h = 0.1;
        let m = 5;
        let matrix = TridiagonalMatrix {
            diagonal: vec![2.0 / (h * h); m],
            off_diagonal: vec![-1.0 / (h * h); m - 1],
        };
        let got = tridiag_eigenvalues(&matrix, m).unwrap();
        for (k, &ev) in got.iter().enumerate() {
            let want =
                2.0 / (h * h) * (1.0 - (std::f64::consts::PI * (k + 1) as f64 / (m as f64 + 1.0)).cos());
            assert!((ev - want).abs() < 1e-9, "k={k}: {ev} vs {want}");
        }
    }

    #[test]
    fn tridiag_trivial_cases() {
        let m = TridiagonalMatrix {
            diagonal: vec![1.0, 2.0, 3.0],
            off_diagonal: vec![0.0, 0.0],
        };
        let got = tridiag_eigenvalues(&m, 3).unwrap();
        for (a, b) in got.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).abs() < 1e-10);
        }
        // 2x2 with coupling: eigenvalues {1, 3}
        let m = TridiagonalMatrix {
            diagonal: vec![2.0, 2.0],
            off_diagonal: vec![-1.0],
        };
        let got = tridiag_eigenvalues(&m, 2).unwrap();
        assert!((got[0] - 1.0).abs() < 1e-10 && (got[1] - 3.0).abs() < 1e-10);
        // Sturm count at +inf equals the order
        assert_eq!(sturm_count(&m, f64::INFINITY), 2);
        assert!(tridiag_eigenvalues(&m, 3).is_err());
    }

    #[test]
    fn centrifugal_free_case_alpha_half() {
        // α = 1/2 removes the 1/r² term entirely: V = r² on every node
        let grid = RadialGrid::new(1e-3, 14.0, 8000).unwrap();
        let m = discretize_g_equation(0.5, &grid).unwrap();
        let h = grid.spacing();
        for (i, &d) in m.diagonal.iter().enumerate() {
            let r = grid.r_min + h * (i + 1) as f64;
            assert!((d - (2.0 / (h * h) + r * r)).abs() < 1e-9);
        }
        // half-line oscillator levels 4n + 3; the wall at r_min biases the
        // levels by ~|G'(0)|² r_min since G ~ r here, so the tolerance is
        // linear in r_min rather than O(h²)
        let got = tridiag_eigenvalues(&m, 3).unwrap();
        for (n, &ev) in got.iter().enumerate() {
            let want = 4.0 * n as f64 + 3.0;
            assert!((ev - want).abs() < 5e-3, "n={n}: {ev} vs {want}");
            assert!(ev > want, "wall bias raises the level");
        }
        assert!(discretize_g_equation(-0.1, &grid).is_err());
    }

    #[test]
    fn oracle_matches_closed_form_spot_configs() {
        let grid = RadialGrid::default_oracle();
        // ℓ=1, μ=(0.3,0.7): α=3, levels {8, 12, 16}
        let got = oracle_spectrum(1.0, 0.3, 0.7, 3, &grid).unwrap();
        for (n, &ev) in got.iter().enumerate() {
            let want = 4.0 * n as f64 + 8.0;
            assert!((ev - want).abs() <= 5e-4, "n={n}: {ev} vs {want}");
        }
        // case II: ℓ=1/2, μ=(0.2,0.4): α=1.6, levels {5.2, 9.2, 13.2}
        let got = oracle_spectrum(0.5, 0.2, 0.4, 3, &grid).unwrap();
        for (n, &ev) in got.iter().enumerate() {
            let want = 4.0 * n as f64 + 2.0 + 3.2;
            assert!((ev - want).abs() <= 5e-4, "n={n}: {ev} vs {want}");
        }
    }

    #[test]
    fn oracle_near_critical_coupling() {
        // ℓ=0, μ -> 0: α -> 0 is the critically attractive -1/(4r²) case.
        // A Dirichlet wall at r_min converges only logarithmically there
        // (the √r·ln r admixture dies like 1/|ln r_min|), so the measured
        // bias at r_min = 1e-3 is ~0.3 and no uniform grid reaches the
        // closed-form levels {2, 6, 10} at fine tolerance. The level
        // SPACING of 4 survives much better than the absolute position.
        let grid = RadialGrid::default_oracle();
        let m = discretize_g_equation(0.0, &grid).unwrap();
        let got = tridiag_eigenvalues(&m, 3).unwrap();
        for (n, &ev) in got.iter().enumerate() {
            let want = 4.0 * n as f64 + 2.0;
            assert!((ev - want).abs() <= 0.5, "n={n}: {ev} vs {want}");
        }
        for w in got.windows(2) {
            assert!((w[1] - w[0] - 4.0).abs() < 0.05);
        }
        // mildly attractive α = 0.3 already behaves algebraically
        let m = discretize_g_equation(0.3, &grid).unwrap();
        let got = tridiag_eigenvalues(&m, 3).unwrap();
        for (n, &ev) in got.iter().enumerate() {
            let want = 4.0 * n as f64 + 2.6;
            assert!((ev - want).abs() <= 5e-2, "n={n}: {ev} vs {want}");
        }
    }

    #[test]
    fn convergence_check_reports_small_shift() {
        let grid = RadialGrid::new(2e-3, 14.0, 4000).unwrap();
        let (levels, shift) = oracle_spectrum_checked(1.0, 0.3, 0.7, 3, &grid).unwrap();
        assert!(shift < 1e-4, "halving shifted eigenvalues by {shift}");
        assert!((levels[0] - 8.0).abs() < 5e-4);
    }

    #[test]
    fn boundary_insensitivity() {
        // identical spacing, wall moved from ~12 to ~16: eigenvalues move by
        // less than 1e-8
        let h = 1.6e-3;
        let n12 = 7501usize;
        let r_min = 1e-3;
        let a = RadialGrid::new(r_min, r_min + h * (n12 as f64 - 1.0), n12).unwrap();
        let n16 = n12 + 2500;
        let b = RadialGrid::new(r_min, r_min + h * (n16 as f64 - 1.0), n16).unwrap();
        let ea = oracle_spectrum(1.0, 0.3, 0.7, 6, &a).unwrap();
        let eb = oracle_spectrum(1.0, 0.3, 0.7, 6, &b).unwrap();
        for (x, y) in ea.iter().zip(&eb) {
            assert!((x - y).abs() < 1e-8, "{x} vs {y}");
        }
    }

    #[test]
    fn case_coincidence_same_alpha_same_matrix() {
        // case I (ℓ=1, μ1+μ2=1) and case II (ℓ=1/2, μ1+μ2=2) share α = 3:
        // identical discretized operators, identical spectra
        let grid = RadialGrid::new(4e-3, 14.0, 2000).unwrap();
        let a = discretize_g_equation(2.0 * 1.0 + 0.3 + 0.7, &grid).unwrap();
        let b = discretize_g_equation(2.0 * 0.5 + 1.2 + 0.8, &grid).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn oracle_vs_chain_rows() {
        let mut p = ModelParams::natural_units();
        p.b_field = 1.0;
        let s = Sector::new(1, 1, 2, LambdaBranch::Plus).unwrap();
        let grid = RadialGrid::default_oracle();
        let rows = oracle_vs_chain(&p, &s, 4, &grid).unwrap();
        assert_eq!(rows.len(), 4);
        for row in &rows {
            // the chain follows the oracle; the printed formula does not
            assert!(row.chain_deviation < 1e-4, "chain dev {}", row.chain_deviation);
            assert!(row.printed_deviation > 1e-2, "printed dev {}", row.printed_deviation);
        }
        // monotone ladder: Ẽ increases by 4 per level
        for w in rows.windows(2) {
            assert!((w[1].oracle_e_tilde - w[0].oracle_e_tilde - 4.0).abs() < 2e-3);
        }
    }
}
