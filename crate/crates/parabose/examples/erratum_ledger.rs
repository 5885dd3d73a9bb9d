//! Runs the full verification sweep on a reduced grid and prints the erratum
//! ledger: closed-form constants and readings that disagree with unitarity,
//! the recurrence, or the ladder oracle (each recorded with both values).
//!
//! ```bash
//! cargo run --release --example erratum_ledger
//! ```

use parabose::commands::{cmd_verify, VerifyParams};

fn main() -> anyhow::Result<()> {
    let params = VerifyParams {
        suite: "all".into(),
        mu_grid: vec!["1/2".into(), "3/4".into()],
        max_level: 6,
    };
    let report = cmd_verify(&params)?;

    println!("verification status: {:?}\n", report.status);
    if let Some(suites) = report.results.get("suites").and_then(|s| s.as_array()) {
        for suite in suites {
            println!("suite {}:", suite["suite"].as_str().unwrap_or("?"));
            for check in suite["checks"].as_array().into_iter().flatten() {
                println!(
                    "  {:<62} residual {:>9.3e}  [{}]",
                    check["name"].as_str().unwrap_or("?"),
                    check["max_residual"].as_f64().unwrap_or(f64::NAN),
                    if check["pass"].as_bool().unwrap_or(false) { "pass" } else { "FAIL" },
                );
            }
        }
    }

    println!("\nerratum ledger ({} findings):", report.erratum_findings.len());
    for finding in &report.erratum_findings {
        println!("- {}", finding.location);
        println!("    as printed: {}", finding.expected);
        println!("    forced:     {}", finding.observed);
        if let Some(c) = finding.absorbed_constant {
            println!("    ratio:      {c}");
        }
    }
    Ok(())
}
