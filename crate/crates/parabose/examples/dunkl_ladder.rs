//! The one-dimensional Dunkl realization: ladder operators acting on
//! oscillator wavefunctions, exactly rational in the Γ-free normalization,
//! plus the anticommutator relation and quadrature orthonormality.
//!
//! ```bash
//! cargo run --example dunkl_ladder
//! ```

use parabose::arith::{mu_number, rat, to_f64};
use parabose::osp::Generator;
use parabose::wavefun::{orthonormality_integral, psi1d, psi1d_raw, realize_apply};

fn main() {
    let mu = rat(1, 4);
    println!("one-dimensional oscillator at mu = {mu}\n");

    println!("Γ-free polynomial parts and the exact ladder constants:");
    for n in 0..=4u32 {
        let raw = psi1d_raw(n, &mu);
        let coeffs: Vec<String> = raw.poly.coeffs().iter().map(|c| c.to_string()).collect();
        println!("  h_{n}: {coeffs:?}");
        let up = raw.ladder_plus_core();
        let next = psi1d_raw(n + 1, &mu);
        // (x - D) h_n = c * h_{n+1} with c rational
        let c = up
            .poly
            .coeffs()
            .iter()
            .zip(next.poly.coeffs())
            .find(|(_, b)| !num::Zero::is_zero(*b))
            .map(|(a, b)| a / b)
            .unwrap();
        println!("    (x - D) h_{n} = {c} * h_{}", n + 1);
    }

    println!("\nnormalized ladders reproduce the module actions:");
    for n in 0..=5u32 {
        let psi = psi1d(n, &mu);
        let raised = realize_apply(Generator::JPlus, &psi);
        let amp = to_f64(&mu_number(n + 1, &mu)).sqrt();
        let resid = raised
            .poly
            .sub(&psi1d(n + 1, &mu).poly.scale(&amp))
            .max_abs_coeff();
        println!("  J+ psi_{n} = sqrt([{}]_mu) psi_{}: residual {resid:.3e}", n + 1, n + 1);
    }

    println!("\nanticommutator {{J+, J-}} = 2 J0 on psi_3:");
    let f = psi1d(3, &mu);
    let a = realize_apply(Generator::JPlus, &realize_apply(Generator::JMinus, &f));
    let b = realize_apply(Generator::JMinus, &realize_apply(Generator::JPlus, &f));
    let twoj0 = realize_apply(Generator::J0, &f).poly.scale(&2.0);
    println!("  residual {:.3e}", a.poly.add(&b.poly).sub(&twoj0).max_abs_coeff());

    println!("\northonormality under |x|^(2 mu) dx by quadrature:");
    for n in 0..=3u32 {
        for m in 0..=n {
            let integral = orthonormality_integral(&psi1d(n, &mu), &psi1d(m, &mu));
            println!("  <psi_{n}, psi_{m}> = {integral:+.12}");
        }
    }
}
