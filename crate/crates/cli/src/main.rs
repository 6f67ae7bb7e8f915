//! Command-line front end: spectrum tables, wavefunction sampling, the
//! finite-difference oracle and the full verification report.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error. Output is deterministic: fixed 15-significant-digit float
//! formatting and a fixed row order.

mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{parse_sector, RunConfig};
use dunkl_landau::oracle::{oracle_vs_chain, RadialGrid};
use dunkl_landau::spectrum::{enumerate_records, wavefunction_eval, SpectrumRecord};
use dunkl_landau::verify::run_verification;

#[derive(Parser)]
#[command(
    name = "dunkl-landau",
    about = "Landau levels of the 2D Dunkl-Klein-Gordon oscillator: closed-form, algebraic and finite-difference routes with cross-verification",
    version
)]
struct Cli {
    /// JSON configuration file; flags override file values.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TableArgs {
    /// Output format.
    #[arg(long, value_parser = ["csv", "json"])]
    format: Option<String>,

    /// Highest radial quantum number.
    #[arg(long, allow_hyphen_values = true)]
    n_max: Option<i64>,

    /// Sector selector "s1,s2,ell,sign"; repeatable. "sign" is +, - or 0.
    #[arg(long = "sector", allow_hyphen_values = true)]
    sectors: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the level table, one row per (sector, n, source).
    Spectrum(TableArgs),

    /// Sample the separated wavefunction on a (rho, phi) grid.
    Wavefunction {
        #[command(flatten)]
        table: TableArgs,
        /// Radial quantum number of the sampled state.
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Largest sampled radius.
        #[arg(long, default_value_t = 6.0)]
        rho_max: f64,
        /// Number of radial samples.
        #[arg(long, default_value_t = 120)]
        n_rho: usize,
        /// Number of angular samples over [0, 2π).
        #[arg(long, default_value_t = 180)]
        n_phi: usize,
    },

    /// Run every identity suite and emit the JSON verification report.
    Verify,

    /// Finite-difference eigenvalues against both closed-form routes.
    Oracle {
        #[command(flatten)]
        table: TableArgs,
        /// Radial grid "rmin,rmax,N".
        #[arg(long)]
        grid: Option<String>,
        /// Number of levels to extract.
        #[arg(long, default_value_t = 6)]
        levels: usize,
    },

    /// Print the effective configuration after flag overrides.
    DumpConfig,
}

fn fmt_float(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{:.14e}", v)
    }
}

fn load_config(cli_config: &Option<std::path::PathBuf>) -> Result<RunConfig, String> {
    match cli_config {
        None => Ok(RunConfig::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
            serde_json::from_str(&text).map_err(|e| format!("bad config: {e}"))
        }
    }
}

fn apply_overrides(cfg: &mut RunConfig, table: &TableArgs) {
    if let Some(f) = &table.format {
        cfg.format = f.clone();
    }
    if let Some(n) = table.n_max {
        cfg.n_max = n;
    }
    if !table.sectors.is_empty() {
        cfg.sectors = table.sectors.clone();
    }
}

fn write_output(out: &Option<std::path::PathBuf>, content: &str) -> Result<(), String> {
    match out {
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| e.to_string())?;
            Ok(())
        }
        Some(path) => std::fs::write(path, content).map_err(|e| e.to_string()),
    }
}

const SPECTRUM_HEADER: &str =
    "n,ell,s1,s2,lambda_sign,lambda,k,e_tilde,E_plus,E_minus,source,status";

fn spectrum_csv(records: &[SpectrumRecord]) -> String {
    let mut out = String::from(SPECTRUM_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            fmt_float(r.sector.ell()),
            r.sector.s1,
            r.sector.s2,
            r.sector.branch.sign() as i8,
            fmt_float(r.lambda),
            fmt_float(r.k),
            fmt_float(r.e_tilde),
            fmt_float(r.e_plus),
            fmt_float(r.e_minus),
            r.source,
            r.status
        ));
    }
    out
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    let mut cfg = load_config(&cli.config)?;

    match &cli.command {
        Command::Spectrum(table) => {
            apply_overrides(&mut cfg, table);
            cfg.validate()?;
            let params = cfg.params()?;
            let sectors = cfg.sector_list()?;
            let records = enumerate_records(&params, cfg.n_max as u32, &sectors);
            let content = if cfg.format == "csv" {
                spectrum_csv(&records)
            } else {
                serde_json::to_string_pretty(&records).map_err(|e| e.to_string())? + "\n"
            };
            write_output(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Wavefunction {
            table,
            n,
            rho_max,
            n_rho,
            n_phi,
        } => {
            apply_overrides(&mut cfg, table);
            cfg.validate()?;
            if *n_rho < 2 || *n_phi < 1 || *rho_max <= 0.0 {
                return Err("wavefunction grid requires n_rho >= 2, n_phi >= 1, rho_max > 0".into());
            }
            let params = cfg.params()?;
            let sector = match table.sectors.as_slice() {
                [one] if one != "all" => parse_sector(one)?,
                _ => return Err("wavefunction requires exactly one --sector selector".into()),
            };
            let mut rows = Vec::with_capacity(n_rho * n_phi);
            for i in 0..*n_rho {
                let rho = rho_max * i as f64 / (*n_rho as f64 - 1.0);
                for j in 0..*n_phi {
                    let phi = 2.0 * std::f64::consts::PI * j as f64 / *n_phi as f64;
                    let v = wavefunction_eval(&params, *n, &sector, rho, phi)
                        .map_err(|e| e.to_string())?;
                    rows.push((rho, phi, v.re, v.im, v.norm_sqr()));
                }
            }
            let content = if cfg.format == "csv" {
                let mut out = String::from("rho,phi,re,im,abs2\n");
                for (rho, phi, re, im, abs2) in &rows {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        fmt_float(*rho),
                        fmt_float(*phi),
                        fmt_float(*re),
                        fmt_float(*im),
                        fmt_float(*abs2)
                    ));
                }
                out
            } else {
                #[derive(serde::Serialize)]
                struct Row {
                    rho: f64,
                    phi: f64,
                    re: f64,
                    im: f64,
                    abs2: f64,
                }
                let rows: Vec<Row> = rows
                    .into_iter()
                    .map(|(rho, phi, re, im, abs2)| Row {
                        rho,
                        phi,
                        re,
                        im,
                        abs2,
                    })
                    .collect();
                serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())? + "\n"
            };
            write_output(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            cfg.validate()?;
            let params = cfg.params()?;
            let seed = match std::env::var("DUNKL_LANDAU_SEED") {
                Ok(text) => text
                    .parse::<u64>()
                    .map_err(|_| format!("DUNKL_LANDAU_SEED must be an integer, got {text:?}"))?,
                Err(_) => 12345,
            };
            let report = run_verification(&params, seed).map_err(|e| e.to_string())?;
            let content = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n";
            write_output(&cli.out, &content)?;
            for check in &report.required_checks {
                eprintln!(
                    "{} {} (measured {:.3e}, tolerance {:.1e})",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.name,
                    check.measured,
                    check.tolerance
                );
            }
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Oracle {
            table,
            grid,
            levels,
        } => {
            apply_overrides(&mut cfg, table);
            cfg.validate()?;
            let params = cfg.params()?;
            let sector = match table.sectors.as_slice() {
                [one] if one != "all" => parse_sector(one)?,
                [] => parse_sector("1,1,1,+")?,
                _ => return Err("oracle requires at most one --sector selector".into()),
            };
            let grid = match grid {
                None => RadialGrid::default_oracle(),
                Some(spec) => {
                    let parts: Vec<&str> = spec.split(',').collect();
                    if parts.len() != 3 {
                        return Err(format!("grid must be rmin,rmax,N; got {spec:?}"));
                    }
                    let r_min: f64 = parts[0].parse().map_err(|_| "bad rmin".to_string())?;
                    let r_max: f64 = parts[1].parse().map_err(|_| "bad rmax".to_string())?;
                    let n: usize = parts[2].parse().map_err(|_| "bad N".to_string())?;
                    RadialGrid::new(r_min, r_max, n).map_err(|e| e.to_string())?
                }
            };
            let rows = oracle_vs_chain(&params, &sector, *levels, &grid).map_err(|e| e.to_string())?;
            let content = if cfg.format == "csv" {
                let mut out = String::from(
                    "n,oracle_e_tilde,chain_e_tilde,oracle_E_plus,chain_E_plus,printed_E_plus,chain_deviation,printed_deviation\n",
                );
                for r in &rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{},{}\n",
                        r.n,
                        fmt_float(r.oracle_e_tilde),
                        fmt_float(r.chain_e_tilde),
                        fmt_float(r.oracle_e_plus),
                        fmt_float(r.chain_e_plus),
                        fmt_float(r.printed_e_plus),
                        fmt_float(r.chain_deviation),
                        fmt_float(r.printed_deviation)
                    ));
                }
                out
            } else {
                serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())? + "\n"
            };
            write_output(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::DumpConfig => {
            cfg.validate()?;
            let content = serde_json::to_string_pretty(&cfg).map_err(|e| e.to_string())? + "\n";
            write_output(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
