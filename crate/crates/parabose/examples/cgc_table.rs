//! Builds a Clebsch-Gordan table twice — by the ladder oracle and by the
//! dual −1 Hahn closed form — and compares them row by row.
//!
//! ```bash
//! cargo run --example cgc_table
//! ```

use parabose::arith::rat;
use parabose::cgc::closed_cgc_table;
use parabose::osp::{oracle_cgc, RepPair};

fn main() -> anyhow::Result<()> {
    let reps = RepPair::new(rat(1, 4), 1, rat(3, 4), 1);
    let emax = 4;
    let oracle = oracle_cgc(&reps, emax);
    let closed = closed_cgc_table(&reps, emax)?;

    println!("coupling (mu1, eps1) x (mu2, eps2) = (1/4, +1) x (3/4, +1)");
    println!("phase convention: {}\n", oracle.phase_convention);

    for e in 0..=emax {
        println!("level E = n1 + n2 = {e}");
        for j in 0..=e {
            let n12 = e - j;
            let orow = oracle.row(n12, j);
            let crow = closed.row(n12, j);
            let constant = orow
                .iter()
                .zip(crow)
                .find(|(o, _)| o.abs() > 1e-9)
                .map(|(o, c)| c / o)
                .unwrap_or(f64::NAN);
            println!("  |n12={n12}, j={j}>   closed/oracle row constant {constant:+.3}");
            print!("    oracle:");
            for v in orow {
                print!(" {v:+.6}");
            }
            println!();
            print!("    closed:");
            for v in crow {
                print!(" {v:+.6}");
            }
            println!();
        }
        println!("  unitarity |M^T M - I|: {:.3e}", oracle.unitarity_residual(e));
    }
    Ok(())
}
