//! Run configuration: JSON file plus flag overrides.

use serde::{Deserialize, Serialize};

use dunkl_landau::angular::{sectors_up_to, LambdaBranch, Sector};
use dunkl_landau::spectrum::ModelParams;

/// On-disk configuration. Flags override file values; the defaults are
/// natural units with μ1 = 0.3, μ2 = 0.7 and no magnetic field.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "one")]
    pub m: f64,
    #[serde(default = "one")]
    pub c: f64,
    #[serde(default = "one")]
    pub hbar: f64,
    #[serde(default = "one")]
    pub omega: f64,
    #[serde(default, rename = "B")]
    pub b_field: f64,
    #[serde(default = "one")]
    pub e_abs: f64,
    #[serde(default = "default_mu1")]
    pub mu1: f64,
    #[serde(default = "default_mu2")]
    pub mu2: f64,
    #[serde(default = "default_n_max")]
    pub n_max: i64,
    #[serde(default = "default_sectors")]
    pub sectors: Vec<String>,
    #[serde(default = "default_format")]
    pub format: String,
}

fn one() -> f64 {
    1.0
}
fn default_mu1() -> f64 {
    0.3
}
fn default_mu2() -> f64 {
    0.7
}
fn default_n_max() -> i64 {
    3
}
fn default_sectors() -> Vec<String> {
    vec!["all".to_string()]
}
fn default_format() -> String {
    "csv".to_string()
}

impl Default for RunConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("defaults")
    }
}

impl RunConfig {
    pub fn params(&self) -> Result<ModelParams, String> {
        ModelParams {
            m: self.m,
            c: self.c,
            hbar: self.hbar,
            omega: self.omega,
            b_field: self.b_field,
            e_abs: self.e_abs,
            mu1: self.mu1,
            mu2: self.mu2,
        }
        .validated()
        .map_err(|e| e.to_string())
    }

    pub fn validate(&self) -> Result<(), String> {
        self.params()?;
        if self.n_max < 0 {
            return Err(format!("n_max must be >= 0, got {}", self.n_max));
        }
        if self.format != "csv" && self.format != "json" {
            return Err(format!("format must be csv or json, got {}", self.format));
        }
        self.sector_list()?;
        Ok(())
    }

    /// Expand the sector selectors. "all" covers both parity classes up to
    /// ℓ = 3 (even class) and ℓ = 5/2 (odd class), both λ branches.
    pub fn sector_list(&self) -> Result<Vec<Sector>, String> {
        let mut out = Vec::new();
        for spec in &self.sectors {
            if spec == "all" {
                out.extend(sectors_up_to(1, 6));
                out.extend(sectors_up_to(-1, 5));
            } else {
                out.push(parse_sector(spec)?);
            }
        }
        if out.is_empty() {
            return Err("no sectors selected".into());
        }
        Ok(out)
    }
}

/// Parse "s1,s2,ell,sign" with s1, s2 in {+1, -1}, ell a nonnegative
/// half-integer and sign one of "+", "-", "0".
pub fn parse_sector(spec: &str) -> Result<Sector, String> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!(
            "sector selector must be s1,s2,ell,sign; got {spec:?}"
        ));
    }
    let parse_sign = |s: &str| -> Result<i8, String> {
        match s {
            "1" | "+1" | "+" => Ok(1),
            "-1" | "-" => Ok(-1),
            _ => Err(format!("reflection eigenvalue must be +1 or -1, got {s:?}")),
        }
    };
    let s1 = parse_sign(parts[0])?;
    let s2 = parse_sign(parts[1])?;
    let ell: f64 = parts[2]
        .parse()
        .map_err(|_| format!("bad ell value {:?}", parts[2]))?;
    let two_ell = 2.0 * ell;
    if ell < 0.0 || (two_ell - two_ell.round()).abs() > 1e-9 {
        return Err(format!("ell must be a nonnegative half-integer, got {ell}"));
    }
    let branch = match parts[3] {
        "+" | "+1" | "plus" => LambdaBranch::Plus,
        "-" | "-1" | "minus" => LambdaBranch::Minus,
        "0" | "zero" => LambdaBranch::Zero,
        other => return Err(format!("lambda sign must be +, - or 0, got {other:?}")),
    };
    Sector::new(s1, s2, two_ell.round() as u32, branch).map_err(|e| e.to_string())
}
