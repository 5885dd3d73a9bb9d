//! Typed command implementations behind the `parabose` binary.
//!
//! Each command takes a serializable parameter struct and produces a
//! [`Report`] whose `params` field echoes the inputs, so a report can be
//! parsed back and re-run to reproduce its tables (rationals bit-for-bit,
//! floats to shortest round-trip precision).

use crate::arith::{parse_rational, to_f64, Rational};
use crate::cgc::{closed_cgc_table, CgcError};
use crate::genfun::{closed_form_descriptor, genfun_lhs_coeffs, genfun_rhs_coeffs, verify_genfun, GenFunCase};
use crate::osp::{oracle_cgc, CgcTable, RepPair};
use crate::report::{ErratumFinding, Report, Status};
use crate::verify::{run_suite, Suite, SweepConfig};
use crate::wavefun::{coupled_psi, psi1d};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("domain error: {0}")]
    Domain(#[from] CgcError),
}

fn parse_mu(s: &str, name: &str) -> Result<Rational, CommandError> {
    parse_rational(s)
        .map_err(|e| CommandError::InvalidParameter(format!("{name} = {s:?}: {e}")))
}

fn check_eps(e: i8, name: &str) -> Result<i8, CommandError> {
    if e == 1 || e == -1 {
        Ok(e)
    } else {
        Err(CommandError::InvalidParameter(format!(
            "{name} must be +1 or -1, got {e}"
        )))
    }
}

/// Parameters of the `cgc` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CgcParams {
    pub mu1: String,
    pub eps1: i8,
    pub mu2: String,
    pub eps2: i8,
    pub emax: u32,
    /// "oracle" (ladder construction) or "closed" (dual −1 Hahn formula)
    pub method: String,
}

fn table_json(table: &CgcTable) -> serde_json::Value {
    let levels: Vec<serde_json::Value> = (0..=table.max_level())
        .map(|e| {
            let rows: Vec<serde_json::Value> = (0..=e)
                .map(|j| {
                    serde_json::json!({
                        "n12": e - j,
                        "j": j,
                        "coeffs": table.row(e - j, j),
                    })
                })
                .collect();
            serde_json::json!({"level": e, "rows": rows})
        })
        .collect();
    serde_json::json!({
        "phase_convention": table.phase_convention,
        "levels": levels,
    })
}

/// CSV rendering of a coupling table: one line per coefficient.
pub fn table_csv(table: &CgcTable) -> String {
    let mut out = String::from("level,n12,j,n1,n2,value\n");
    for e in 0..=table.max_level() {
        for j in 0..=e {
            for (n1, v) in table.row(e - j, j).iter().enumerate() {
                out.push_str(&format!(
                    "{e},{},{j},{n1},{},{v}\n",
                    e - j,
                    e - n1 as u32
                ));
            }
        }
    }
    out
}

/// Builds the requested coupling table and reports it.
pub fn cmd_cgc(params: &CgcParams) -> Result<(Report, CgcTable), CommandError> {
    if params.emax > 64 {
        return Err(CommandError::InvalidParameter(format!(
            "emax = {} exceeds the supported bound 64",
            params.emax
        )));
    }
    let reps = RepPair::new(
        parse_mu(&params.mu1, "mu1")?,
        check_eps(params.eps1, "eps1")?,
        parse_mu(&params.mu2, "mu2")?,
        check_eps(params.eps2, "eps2")?,
    );
    let table = match params.method.as_str() {
        "oracle" => oracle_cgc(&reps, params.emax),
        "closed" => closed_cgc_table(&reps, params.emax)?,
        other => {
            return Err(CommandError::InvalidParameter(format!(
                "method must be \"oracle\" or \"closed\", got {other:?}"
            )))
        }
    };
    let report = Report {
        command: "cgc".into(),
        params: serde_json::to_value(params).expect("params"),
        results: table_json(&table),
        erratum_findings: Vec::new(),
        status: Status::Pass,
    };
    Ok((report, table))
}

/// Parameters of the `verify` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyParams {
    pub suite: String,
    pub mu_grid: Vec<String>,
    pub max_level: u32,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self {
            suite: "all".into(),
            mu_grid: vec!["1/4".into(), "1/2".into(), "3/4".into(), "3/2".into()],
            max_level: 8,
        }
    }
}

/// Runs a verification suite and reports residuals plus the erratum ledger.
pub fn cmd_verify(params: &VerifyParams) -> Result<Report, CommandError> {
    let suite = Suite::parse(&params.suite).ok_or_else(|| {
        CommandError::InvalidParameter(format!(
            "suite must be one of orthogonality|unitarity|genfun|su11|wavefun|all, got {:?}",
            params.suite
        ))
    })?;
    let mut mu_grid = Vec::new();
    for s in &params.mu_grid {
        mu_grid.push(parse_mu(s, "mu-grid entry")?);
    }
    let config = SweepConfig {
        mu_grid,
        ..SweepConfig::default()
    }
    .with_max_level(params.max_level);
    let outcomes = run_suite(suite, &config);
    let pass = outcomes.iter().all(|o| o.pass);
    let findings: Vec<ErratumFinding> = outcomes
        .iter()
        .flat_map(|o| o.findings.iter().cloned())
        .collect();
    Ok(Report {
        command: "verify".into(),
        params: serde_json::to_value(params).expect("params"),
        results: serde_json::json!({ "suites": outcomes }),
        erratum_findings: findings,
        status: if pass { Status::Pass } else { Status::Fail },
    })
}

/// Parameters of the `genfun` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenFunParams {
    pub n12: u32,
    pub j: u32,
    pub mu1: String,
    pub mu2: String,
    pub eps2: i8,
    /// "coeffs" or "closed-form"
    pub emit: String,
}

/// Emits the generating polynomial of one coupled vector and/or the ₂F₁ data
/// of its closed form.
pub fn cmd_genfun(params: &GenFunParams) -> Result<Report, CommandError> {
    let reps = RepPair::new(
        parse_mu(&params.mu1, "mu1")?,
        1,
        parse_mu(&params.mu2, "mu2")?,
        check_eps(params.eps2, "eps2")?,
    );
    let case = GenFunCase {
        n12: params.n12,
        j: params.j,
        reps,
    };
    let results = match params.emit.as_str() {
        "coeffs" => {
            let table = oracle_cgc(&case.reps, case.level());
            let check = verify_genfun(&case, &table);
            serde_json::json!({
                "series_coefficients": genfun_lhs_coeffs(&case, &table),
                "closed_form_coefficients": genfun_rhs_coeffs(&case),
                "residual": check.residual,
                "absorbed_constant": check.absorbed_constant,
            })
        }
        "closed-form" => serde_json::to_value(closed_form_descriptor(&case)).expect("descriptor"),
        other => {
            return Err(CommandError::InvalidParameter(format!(
                "emit must be \"coeffs\" or \"closed-form\", got {other:?}"
            )))
        }
    };
    Ok(Report {
        command: "genfun".into(),
        params: serde_json::to_value(params).expect("params"),
        results,
        erratum_findings: Vec::new(),
        status: Status::Pass,
    })
}

/// Parameters of the `wavefun` command: a 1D mode (n, mu) or a coupled 2D
/// mode (n12, j, mu1, mu2).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WaveFunParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n12: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu2: Option<String>,
}

/// Emits oscillator wavefunction polynomial coefficients (the implicit
/// Gaussian factor is not expanded).
pub fn cmd_wavefun(params: &WaveFunParams) -> Result<Report, CommandError> {
    let results = match (params.n, &params.mu, params.n12, params.j, &params.mu1, &params.mu2) {
        (Some(n), Some(mu), None, None, None, None) => {
            let mu = parse_mu(mu, "mu")?;
            let psi = psi1d(n, &mu);
            serde_json::json!({
                "kind": "one-dimensional",
                "n": n,
                "coefficients": psi.poly.coeffs(),
                "gaussian": "exp(-x^2/2)",
            })
        }
        (None, None, Some(n12), Some(j), Some(mu1), Some(mu2)) => {
            let mu1 = parse_mu(mu1, "mu1")?;
            let mu2 = parse_mu(mu2, "mu2")?;
            let psi = coupled_psi(n12, j, &mu1, &mu2);
            let degree = psi.poly.total_degree().unwrap_or(0);
            let reps = RepPair::new(mu1.clone(), 1, mu2.clone(), 1);
            let ev = f64::from(n12) + to_f64(&reps.mu12(j)) + 0.5;
            let h_residual = psi
                .hamiltonian()
                .poly
                .sub(&psi.poly.scale(&ev))
                .max_abs_coeff();
            let grid: Vec<Vec<f64>> = (0..=degree)
                .map(|i| (0..=degree).map(|jy| psi.poly.coeff(i, jy)).collect())
                .collect();
            serde_json::json!({
                "kind": "coupled",
                "n12": n12,
                "j": j,
                "total_degree": degree,
                "coefficients": grid,
                "coefficient_layout": "coefficients[i][k] multiplies x^i y^k",
                "gaussian": "exp(-(x^2+y^2)/2)",
                "hamiltonian_eigenvalue": ev,
                "hamiltonian_residual": h_residual,
            })
        }
        _ => {
            return Err(CommandError::InvalidParameter(
                "provide either --n with --mu, or --n12 --j --mu1 --mu2".into(),
            ))
        }
    };
    Ok(Report {
        command: "wavefun".into(),
        params: serde_json::to_value(params).expect("params"),
        results,
        erratum_findings: Vec::new(),
        status: Status::Pass,
    })
}
