//! The untwisted su(1,1) warm-up: coupling oracle, the exact vacuum norm,
//! and the dual Hahn generating function.
//!
//! ```bash
//! cargo run --example su11_dual_hahn
//! ```

use parabose::arith::rat;
use parabose::su11::{
    su11_genfun_rhs_coeffs, su11_oracle_cgc, su11_series_coeffs, su11_vacuum_norm_report,
    su11_verify, Su11Pair,
};

fn main() {
    let pair = Su11Pair::new(rat(1, 2), rat(1, 1));
    let table = su11_oracle_cgc(&pair, 12);
    println!("coupling (l1, l2) = (1/2, 1)\n");

    println!("vacuum norms |<0,l1,k,l2|0,l12>|^2 (unitarity-consistent vs printed form):");
    for k in 0..=4u32 {
        let (anchor, printed) = su11_vacuum_norm_report(k, &pair);
        let marker = if anchor == printed { "" } else { "   <- printed form disagrees" };
        println!("  k={k}: {anchor}  vs  {printed}{marker}");
    }

    println!("\ngenerating function, coefficient comparison:");
    for (k, m12) in [(0u32, 0u32), (1, 2), (3, 1), (4, 4)] {
        let closed = su11_genfun_rhs_coeffs(k, m12, &pair);
        let series = su11_series_coeffs(k, m12, &table);
        let residual = su11_verify(k, m12, &table);
        println!("  (k, m12) = ({k}, {m12}): residual {residual:.3e}");
        println!("    closed: {:?}", rounded(&closed));
        println!("    series: {:?}", rounded(&series));
    }
}

fn rounded(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| (x * 1e6).round() / 1e6).collect()
}
