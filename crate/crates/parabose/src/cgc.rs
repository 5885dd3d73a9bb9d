//! Closed-form Clebsch-Gordan coefficients.
//!
//! The full coupling coefficient is carried by a dual −1 Hahn polynomial
//! evaluated on its own orthogonality grid:
//!
//! ```text
//! ⟨n₁, μ₁, ε₁, n₂, μ₂, ε₂ | n₁₂, μ₁₂, ε₁₂⟩
//!   = 2^{−n₁} √( w_j [n₂]_{μ₂}! / (κ₀ [n₁]_{μ₁}! [n₁+n₂]_{μ₂}!) )
//!     · R_{n₁}^{(−1)}(y_j; μ₂, μ₁, n₁+n₂)
//! ```
//!
//! with the grid data taken at (η, ξ, N) = (μ₂, μ₁, n₁+n₂). Since
//! u₁…u_{n₁} = 4^{n₁}[n₁]_{μ₁}! [N]_{μ₂}…[N−n₁+1]_{μ₂}, this is exactly an
//! orthogonal change of basis whenever the weights are positive, so the
//! closed table is unitary by construction. Signs are the formula's own; the
//! comparison against the [`crate::osp`] oracle absorbs one constant per
//! coupled vector and reports it.
//!
//! Two corrections against the oracle are built in (both recorded in the
//! erratum ledger):
//!
//! - Grid indexing: the summand j couples to the grid point with
//!   |y_s| = 2μ₁₂(j) = 2μ₁+2μ₂+2j+1. For odd N the printed grid lists that
//!   point at s = j, but for even N it sits at s = N − j (the even-N grid
//!   enumerates the summands top-down), so the subscript on w_j and y_j is
//!   read through [`grid_index_for_summand`] — indexing the even-N list
//!   directly by j produces a table whose rows belong to other summands.
//! - Column signs: the printed formula reproduces every magnitude but
//!   differs from the coproduct-built coefficients by the n₁-dependent sign
//!   (−1)^{n₁N − n₁(n₁+1)/2} (an implicit uncoupled-basis phase). The factor
//!   is multiplied back in so that rows match the oracle up to one overall
//!   constant each, which is what unitarity can fix.
//!
//! The coupled-vacuum column ⟨n, j−n | 0, j⟩ is also provided through its
//! two-term recursion, anchored by unitarity: the closed product expression
//! for |⟨0,j|0,j⟩|² disagrees with the anchor (already at j = 1,
//! μ₁ = μ₂ = 1/2, where it gives 1 instead of the forced 1/2), so the
//! recursion ratios are trusted, the anchor comes from Σ|⟨n,j−n|0,j⟩|² = 1,
//! and the discrepancy is surfaced through [`vacuum_norm_report`].

use crate::arith::{
    mu_factorial, mu_falling, mu_number, parity_sign, pochhammer, rat, rat_pow, rat_u, to_f64,
    Rational,
};
use crate::orthopoly::{dm1h_data, dual_m1_hahn, OrthoError};
use crate::osp::{coproduct_apply, CgcTable, Generator, RepPair, TensorState};
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CgcError {
    #[error(
        "weight-positivity failure: w_{j} = {weight} < 0 at N = {big_n} for eta = {eta}, xi = {xi}"
    )]
    WeightPositivity {
        j: u32,
        big_n: u32,
        weight: String,
        eta: String,
        xi: String,
    },
    #[error("degenerate orthogonality data: {0}")]
    Degenerate(#[from] OrthoError),
}

/// A single coefficient request ⟨n₁, n₂ | n₁₂, j⟩ for the coupling of `reps`.
#[derive(Debug, Clone, PartialEq)]
pub struct CgcQuery {
    pub n1: u32,
    pub n2: u32,
    pub n12: u32,
    pub j: u32,
    pub reps: RepPair,
}

/// Grid index s carrying the eigenvalue |y_s| = 2μ₁₂(j) of the summand j at
/// level N: s = j for odd N, s = N − j for even N.
pub fn grid_index_for_summand(j: u32, big_n: u32) -> u32 {
    if big_n % 2 == 0 {
        big_n - j
    } else {
        j
    }
}

/// Exact signed square of the closed-form coefficient: `(sign, value²)`.
/// Zero (with sign +1) when the level labels are off shell.
pub fn cgc_closed_signed_sq(q: &CgcQuery) -> Result<(i8, Rational), CgcError> {
    if q.n1 + q.n2 != q.n12 + q.j {
        return Ok((1, Rational::zero()));
    }
    let big_n = q.n1 + q.n2;
    let (eta, xi) = (&q.reps.second.mu, &q.reps.first.mu);
    let data = dm1h_data(eta, xi, big_n)?;
    let s = grid_index_for_summand(q.j, big_n) as usize;
    let w = &data.weights[s];
    if w.is_negative() {
        return Err(CgcError::WeightPositivity {
            j: q.j,
            big_n,
            weight: w.to_string(),
            eta: eta.to_string(),
            xi: xi.to_string(),
        });
    }
    let r_val = dual_m1_hahn(q.n1, eta, xi, big_n).eval(&data.grid[s]);
    // 2^{−n₁} squared is the 4^{n₁} in the denominator
    let sq = w * mu_factorial(q.n2, eta) * &r_val * &r_val
        / (&data.kappa0
            * rat_pow(&rat_u(4), q.n1)
            * mu_factorial(q.n1, xi)
            * mu_factorial(big_n, eta));
    let sign = if r_val.is_negative() { -1 } else { 1 };
    Ok((sign * parity_sign(q.n1, big_n) as i8, sq))
}

/// Closed-form coefficient as a float.
pub fn cgc_closed(q: &CgcQuery) -> Result<f64, CgcError> {
    let (sign, sq) = cgc_closed_signed_sq(q)?;
    Ok(f64::from(sign) * to_f64(&sq).sqrt())
}

/// Assembles the closed-form table for all levels up to `emax`, sharing the
/// per-level grid data and recurrence polynomials.
pub fn closed_cgc_table(reps: &RepPair, emax: u32) -> Result<CgcTable, CgcError> {
    let (mu1, mu2) = (&reps.first.mu, &reps.second.mu);
    let mut levels = Vec::with_capacity(emax as usize + 1);
    for e in 0..=emax {
        let data = dm1h_data(mu2, mu1, e)?;
        let polys: Vec<_> = (0..=e).map(|n| dual_m1_hahn(n, mu2, mu1, e)).collect();
        let fact_e = mu_factorial(e, mu2);
        let mut rows = Vec::with_capacity(e as usize + 1);
        for j in 0..=e {
            let s = grid_index_for_summand(j, e) as usize;
            let w = &data.weights[s];
            if w.is_negative() {
                return Err(CgcError::WeightPositivity {
                    j,
                    big_n: e,
                    weight: w.to_string(),
                    eta: mu2.to_string(),
                    xi: mu1.to_string(),
                });
            }
            let y = &data.grid[s];
            let row: Vec<f64> = (0..=e)
                .map(|n1| {
                    let n2 = e - n1;
                    let r_val = polys[n1 as usize].eval(y);
                    let sq = w * mu_factorial(n2, mu2) * &r_val * &r_val
                        / (&data.kappa0
                            * rat_pow(&rat_u(4), n1)
                            * mu_factorial(n1, mu1)
                            * &fact_e);
                    let sign = if r_val.is_negative() { -1.0 } else { 1.0 };
                    sign * f64::from(parity_sign(n1, e)) * to_f64(&sq).sqrt()
                })
                .collect();
            rows.push(row);
        }
        levels.push(rows);
    }
    Ok(CgcTable::from_levels(
        reps.clone(),
        "dual -1 Hahn closed form, column signs aligned to the coproduct",
        levels,
    ))
}

/// |⟨0,j|0,j⟩|² fixed by unitarity of the coupled-vacuum column:
/// 1 / Σ_{n=0}^{j} [j]_{μ₂}…[j−n+1]_{μ₂} / [n]_{μ₁}!, exact.
pub fn vacuum_norm_sq(j: u32, reps: &RepPair) -> Rational {
    let total: Rational = (0..=j)
        .map(|n| mu_falling(j, n, &reps.second.mu) / mu_factorial(n, &reps.first.mu))
        .sum();
    Rational::one() / total
}

/// The closed product expression for |⟨0,j|0,j⟩|² as printed:
/// (j/2+1+μ₁+μ₂)_{j/2} / (2^{j/2}(1/2+μ₁)_{j/2}) for even j and
/// ((j+1)/2+μ₁+μ₂)_{(j+1)/2} / (2^{(j+1)/2}(1/2+μ₁)_{(j+1)/2}) for odd j.
/// Kept verbatim for comparison against the unitarity anchor; see
/// [`vacuum_norm_report`].
pub fn vacuum_norm_sq_closed_form(j: u32, mu1: &Rational, mu2: &Rational) -> Rational {
    let h = (j + 1) / 2; // j/2 for even j, (j+1)/2 for odd j
    pochhammer(&(rat_u(h) + Rational::one() + mu1 + mu2 - rat_u(j % 2)), h)
        / (rat_pow(&rat_u(2), h) * pochhammer(&(rat(1, 2) + mu1), h))
}

/// Unitarity-derived vs closed-form vacuum norm at one point, for the erratum
/// ledger: `(anchor, closed_form)`; they disagree for j ≥ 1 generically.
pub fn vacuum_norm_report(j: u32, reps: &RepPair) -> (Rational, Rational) {
    (
        vacuum_norm_sq(j, reps),
        vacuum_norm_sq_closed_form(j, &reps.first.mu, &reps.second.mu),
    )
}

/// Coupled-vacuum coefficient ⟨n, j−n | 0, j⟩ from the two-term recursion,
/// anchored by the unitarity norm with ⟨0,j|0,j⟩ > 0.
pub fn vacuum_cgc(n: u32, j: u32, reps: &RepPair) -> f64 {
    assert!(n <= j, "vacuum coefficient requires 0 <= n <= j");
    let anchor = to_f64(&vacuum_norm_sq(j, reps)).sqrt();
    let ratio = mu_falling(j, n, &reps.second.mu) / mu_factorial(n, &reps.first.mu);
    let eps2_pow = if n % 2 == 0 { 1.0 } else { -f64::from(reps.second.eps) };
    eps2_pow * f64::from(parity_sign(n, j)) * to_f64(&ratio).sqrt() * anchor
}

/// First-excited coefficient ⟨n, 1+j−n | 1, j⟩, computed operationally:
/// apply Δ(J₊) to the vacuum column and normalize by √[1]_{μ₁₂}.
pub fn first_cgc(n: u32, j: u32, reps: &RepPair) -> f64 {
    assert!(n <= j + 1, "first-excited coefficient requires 0 <= n <= j+1");
    let vacuum = TensorState {
        level: j,
        coeffs: (0..=j).map(|m| vacuum_cgc(m, j, reps)).collect(),
    };
    let raised = coproduct_apply(Generator::JPlus, &vacuum, reps);
    let norm = to_f64(&mu_number(1, &reps.mu12(j))).sqrt();
    raised.coeffs[n as usize] / norm
}

/// The printed closed form for ⟨n, 1+j−n | 1, j⟩ taken literally, with the
/// (n−1)-factor falling product read as the empty product at n = 0. The
/// Δ(J₊) route shows the n = 0 boundary should carry √[1+j]_{μ₂} instead of
/// [1+j]_{μ₂}; both are exposed so the discrepancy can be reported.
pub fn first_cgc_literal(n: u32, j: u32, reps: &RepPair) -> f64 {
    assert!(n <= j + 1);
    let (mu1, mu2) = (&reps.first.mu, &reps.second.mu);
    let anchor = to_f64(&vacuum_norm_sq(j, reps)).sqrt();
    let falling = if n == 0 {
        Rational::one()
    } else {
        mu_falling(j, n - 1, mu2)
    };
    let bracket = mu_number(n, mu1) + mu_number(1 + j - n, mu2);
    let eps2_pow = if n % 2 == 0 { 1.0 } else { -f64::from(reps.second.eps) };
    eps2_pow
        * f64::from(parity_sign(n, j))
        * to_f64(&(falling / mu_factorial(n, mu1))).sqrt()
        * to_f64(&bracket)
        * anchor
        / to_f64(&mu_number(1, &reps.mu12(j))).sqrt()
}
