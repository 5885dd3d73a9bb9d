//! Plane Dunkl oscillator: coupled wavefunctions as exact bivariate
//! polynomials, their eigenvalues, the decomposition over Cartesian
//! products, and the angular generating function.
//!
//! ```bash
//! cargo run --example wavefunctions
//! ```

use parabose::arith::{rat, to_f64};
use parabose::osp::{oracle_cgc, RepPair};
use parabose::wavefun::{
    angular_genfun_coeffs, angular_series_coeffs, coupled_psi, decomposition_residual,
    verify_angular_genfun,
};

fn main() {
    let (mu1, mu2) = (rat(1, 4), rat(3, 4));
    let reps = RepPair::new(mu1.clone(), 1, mu2.clone(), 1);
    let (n12, j) = (2u32, 2u32);

    let psi = coupled_psi(n12, j, &mu1, &mu2);
    println!("coupled wavefunction (n12, j) = ({n12}, {j}), mu = (1/4, 3/4)");
    println!("polynomial part (x^i y^k coefficients, Gaussian implicit):");
    let degree = psi.poly.total_degree().unwrap();
    for i in 0..=degree {
        let row: Vec<f64> = (0..=degree)
            .map(|k| (psi.poly.coeff(i, k) * 1e6).round() / 1e6)
            .collect();
        println!("  x^{i}: {row:?}");
    }

    let ev_h = f64::from(n12) + to_f64(&reps.mu12(j)) + 0.5;
    let res_h = psi
        .hamiltonian()
        .poly
        .sub(&psi.poly.scale(&ev_h))
        .max_abs_coeff();
    println!("\nplane Hamiltonian eigenvalue {ev_h}: residual {res_h:.3e}");
    let ev_c = -f64::from(reps.eps12(j)) * to_f64(&reps.mu12(j));
    let res_c = psi.casimir().poly.sub(&psi.poly.scale(&ev_c)).max_abs_coeff();
    println!("Dunkl angular-momentum eigenvalue {ev_c}: residual {res_c:.3e}");

    let table = oracle_cgc(&reps, 6);
    println!("\ndecomposition over Cartesian oscillator products (coupling coefficients");
    println!("from the ladder oracle):");
    for nn in 0..=4u32 {
        for jj in 0..=(4 - nn) {
            let r = decomposition_residual(nn, jj, &table);
            println!("  (n12, j) = ({nn}, {jj}): max coefficient residual {r:.3e}");
        }
    }

    println!("\nangular generating function in z = cot(phi):");
    let closed = angular_genfun_coeffs(n12, j, &mu1, &mu2);
    let series = angular_series_coeffs(n12, j, &table);
    println!("  closed: {:?}", rounded(&closed));
    println!("  series: {:?}", rounded(&series));
    let check = verify_angular_genfun(n12, j, &table);
    println!(
        "  residual {:.3e}, absorbed constant {:+.6}",
        check.residual, check.absorbed_constant
    );
}

fn rounded(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| (x * 1e6).round() / 1e6).collect()
}
