//! Verifies the four parity cases of the coupling generating functions
//! coefficient by coefficient, and prints the ₂F₁ data of one closed form.
//!
//! ```bash
//! cargo run --example generating_functions
//! ```

use parabose::arith::rat;
use parabose::genfun::{
    closed_form_descriptor, genfun_lhs_coeffs, genfun_rhs_coeffs, verify_genfun, GenFunCase,
};
use parabose::osp::{oracle_cgc, RepPair};

fn main() {
    let reps = RepPair::new(rat(1, 2), 1, rat(1, 4), 1);
    let emax = 8;
    let table = oracle_cgc(&reps, emax);

    println!("coupling (1/2, +1) x (1/4, +1); series vs closed form, by parity case\n");
    for (n12, j) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3)] {
        let case = GenFunCase {
            n12,
            j,
            reps: reps.clone(),
        };
        let check = verify_genfun(&case, &table);
        println!(
            "(n12, j) = ({n12}, {j})  [{} n12, {} j]",
            if n12 % 2 == 0 { "even" } else { "odd" },
            if j % 2 == 0 { "even" } else { "odd" },
        );
        println!("  series coefficients: {:?}", rounded(&genfun_lhs_coeffs(&case, &table)));
        println!("  closed coefficients: {:?}", rounded(&genfun_rhs_coeffs(&case)));
        println!(
            "  max residual {:.3e}, absorbed constant {:+.6}\n",
            check.residual, check.absorbed_constant
        );
    }

    let case = GenFunCase {
        n12: 2,
        j: 4,
        reps: reps.clone(),
    };
    println!(
        "closed-form data for (n12, j) = (2, 4):\n{}",
        serde_json::to_string_pretty(&closed_form_descriptor(&case)).unwrap()
    );
}

fn rounded(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| (x * 1e6).round() / 1e6).collect()
}
