//! Command-line front end: coupling tables, verification sweeps with an
//! erratum ledger, generating-function data, and wavefunction coefficients,
//! all as JSON reports (tables also as CSV).
//!
//! Exit codes: 0 success, 1 verification residual over tolerance, 2 flag
//! parse/validation failure, 3 domain error (e.g. a negative weight under a
//! square root).

use clap::{Args, Parser, Subcommand};
use parabose::commands::{
    cmd_cgc, cmd_genfun, cmd_verify, cmd_wavefun, table_csv, CgcParams, CommandError,
    GenFunParams, VerifyParams, WaveFunParams,
};
use parabose::report::Report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "parabose",
    about = "osp(1|2) Clebsch-Gordan coefficients, three ways, cross-verified",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit Clebsch-Gordan tables per energy level
    Cgc(CgcArgs),
    /// Run a verification sweep and write a JSON report
    Verify(VerifyArgs),
    /// Emit generating-function coefficients or the closed-form parameters
    Genfun(GenFunArgs),
    /// Emit wavefunction polynomial coefficients
    Wavefun(WaveFunArgs),
}

#[derive(Args)]
struct CgcArgs {
    /// First deformation parameter, as p/q
    #[arg(long)]
    mu1: String,
    /// Second deformation parameter, as p/q
    #[arg(long)]
    mu2: String,
    /// First involution sign (+1 or -1)
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    eps1: i8,
    /// Second involution sign (+1 or -1)
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    eps2: i8,
    /// Largest energy level E = n1 + n2 (at most 64)
    #[arg(long)]
    emax: u32,
    /// Construction: ladder oracle or dual -1 Hahn closed form
    #[arg(long, default_value = "oracle", value_parser = ["oracle", "closed"])]
    method: String,
    /// Output format
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// Also write the output to this file (atomically)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which sweep to run
    #[arg(
        long,
        default_value = "all",
        value_parser = ["orthogonality", "unitarity", "genfun", "su11", "wavefun", "all"]
    )]
    suite: String,
    /// Comma-separated deformation grid, e.g. 1/4,1/2,3/4,3/2
    #[arg(long, value_delimiter = ',')]
    mu_grid: Option<Vec<String>>,
    /// Largest level swept
    #[arg(long, default_value_t = 8)]
    max_level: u32,
    /// Also write the JSON report to this file (atomically)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenFunArgs {
    #[arg(long)]
    n12: u32,
    #[arg(long)]
    j: u32,
    #[arg(long)]
    mu1: String,
    #[arg(long)]
    mu2: String,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    eps2: i8,
    /// Emit the coefficient vectors or the 2F1 parameter tuples
    #[arg(long, default_value = "coeffs", value_parser = ["coeffs", "closed-form"])]
    emit: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WaveFunArgs {
    /// 1D mode: oscillator level n (requires --mu)
    #[arg(long, requires = "mu", conflicts_with_all = ["n12", "j", "mu1", "mu2"])]
    n: Option<u32>,
    /// 1D mode: deformation parameter, as p/q
    #[arg(long)]
    mu: Option<String>,
    /// 2D mode: coupled level (requires --j, --mu1, --mu2)
    #[arg(long, requires_all = ["j", "mu1", "mu2"])]
    n12: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    #[arg(long)]
    mu1: Option<String>,
    #[arg(long)]
    mu2: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn install_thread_cap() {
    if let Ok(value) = std::env::var("PARABOSE_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    println!("{text}");
    if let Some(path) = out {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, format!("{text}\n"))?;
        std::fs::rename(&tmp, path)?;
    }
    Ok(())
}

fn emit_report(report: &Report, out: Option<&PathBuf>) -> std::io::Result<()> {
    println!("{}", report.to_json());
    if let Some(path) = out {
        report.write_atomic(path)?;
    }
    Ok(())
}

fn run() -> Result<u8, CommandError> {
    let cli = Cli::parse();
    install_thread_cap();
    match cli.command {
        Command::Cgc(args) => {
            let params = CgcParams {
                mu1: args.mu1,
                eps1: args.eps1,
                mu2: args.mu2,
                eps2: args.eps2,
                emax: args.emax,
                method: args.method,
            };
            let (report, table) = cmd_cgc(&params)?;
            let io = if args.format == "csv" {
                emit(table_csv(&table).trim_end(), args.out.as_ref())
            } else {
                emit_report(&report, args.out.as_ref())
            };
            io.map_err(|e| CommandError::InvalidParameter(format!("io: {e}")))?;
            Ok(0)
        }
        Command::Verify(args) => {
            let params = VerifyParams {
                suite: args.suite,
                mu_grid: args
                    .mu_grid
                    .unwrap_or_else(|| VerifyParams::default().mu_grid),
                max_level: args.max_level,
            };
            let report = cmd_verify(&params)?;
            if let Some(suites) = report.results.get("suites").and_then(|s| s.as_array()) {
                for suite in suites {
                    for check in suite["checks"].as_array().into_iter().flatten() {
                        eprintln!(
                            "{}: {} -> max residual {:e} (tolerance {:e}) [{}]",
                            suite["suite"].as_str().unwrap_or("?"),
                            check["name"].as_str().unwrap_or("?"),
                            check["max_residual"].as_f64().unwrap_or(f64::NAN),
                            check["tolerance"].as_f64().unwrap_or(f64::NAN),
                            if check["pass"].as_bool().unwrap_or(false) {
                                "pass"
                            } else {
                                "FAIL"
                            }
                        );
                    }
                }
            }
            emit_report(&report, args.out.as_ref())
                .map_err(|e| CommandError::InvalidParameter(format!("io: {e}")))?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Genfun(args) => {
            let params = GenFunParams {
                n12: args.n12,
                j: args.j,
                mu1: args.mu1,
                mu2: args.mu2,
                eps2: args.eps2,
                emit: args.emit,
            };
            let report = cmd_genfun(&params)?;
            emit_report(&report, args.out.as_ref())
                .map_err(|e| CommandError::InvalidParameter(format!("io: {e}")))?;
            Ok(0)
        }
        Command::Wavefun(args) => {
            let params = WaveFunParams {
                n: args.n,
                mu: args.mu,
                n12: args.n12,
                j: args.j,
                mu1: args.mu1,
                mu2: args.mu2,
            };
            let report = cmd_wavefun(&params)?;
            emit_report(&report, args.out.as_ref())
                .map_err(|e| CommandError::InvalidParameter(format!("io: {e}")))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(CommandError::InvalidParameter(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(err @ CommandError::Domain(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}
