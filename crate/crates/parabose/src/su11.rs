//! The su(1,1) analogue: untwisted coupling, its coupled-vacuum closed forms,
//! and the dual-Hahn generating function they produce.
//!
//! Positive-discrete-series representations (l) act by
//!
//! ```text
//! A₀|m,l⟩ = (l+m)|m,l⟩
//! A₊|m,l⟩ = √((m+1)(2l+m)) |m+1,l⟩
//! A₋|m,l⟩ = √(m(2l+m−1)) |m−1,l⟩
//! ```
//!
//! with the plain coproduct Δ(A) = A⊗1 + 1⊗A and decomposition
//! (l₁)⊗(l₂) = ⊕_k (l₁+l₂+k). The same lowest-weight/raising oracle as in
//! [`crate::osp`] produces the coupling tables, against which the closed
//! vacuum coefficients and the generating function
//!
//! ```text
//! ₂F₁(−k, 1−k−2l₂; 2l₁; z) (1−z)^{m₁₂} / √(m₁₂!(2l₁₂)_{m₁₂})
//!   × ⟨0,l₁,k,l₂|0,l₁₂⟩ / √(k!(2l₂)_k)
//! = Σ_m (−1)^m ⟨m,l₁,m₁₂+k−m,l₂|m₁₂,l₁₂⟩ z^m
//!       / √(m!(2l₁)_m (m₁₂+k−m)!(2l₂)_{m₁₂+k−m})
//! ```
//!
//! are verified coefficient by coefficient. This untwisted warm-up exercises
//! the whole machinery on a case whose closed forms hold exactly.

use crate::arith::{binomial, factorial, pochhammer, rat_u, to_f64, Rational};
use crate::hyper::hyp2f1_poly;
use crate::poly::DensePoly;
use num::{One, Signed};

/// su(1,1) tensor-product factors (l₁, l₂), both positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Su11Pair {
    pub l1: Rational,
    pub l2: Rational,
}

impl Su11Pair {
    pub fn new(l1: Rational, l2: Rational) -> Self {
        assert!(l1.is_positive() && l2.is_positive(), "l1, l2 must be > 0");
        Self { l1, l2 }
    }

    /// l₁₂ = l₁ + l₂ + k of the k-th summand.
    pub fn l12(&self, k: u32) -> Rational {
        &self.l1 + &self.l2 + rat_u(k)
    }
}

/// √((m+1)(2l+m)): raising amplitude out of |m, l⟩.
fn raise_amp(m: u32, l: &Rational) -> f64 {
    (f64::from(m + 1) * to_f64(&(l + l + rat_u(m)))).sqrt()
}

/// Level-homogeneous state in (l₁)⊗(l₂); coefficient of |m₁⟩⊗|level−m₁⟩.
#[derive(Debug, Clone)]
pub struct Su11State {
    pub level: u32,
    pub coeffs: Vec<f64>,
}

impl Su11State {
    fn zero(level: u32) -> Self {
        Self {
            level,
            coeffs: vec![0.0; level as usize + 1],
        }
    }

    fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn scaled(&self, c: f64) -> Self {
        Self {
            level: self.level,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Δ(A₊) on a level-homogeneous state.
pub fn su11_raise(state: &Su11State, pair: &Su11Pair) -> Su11State {
    let e = state.level;
    let mut out = Su11State::zero(e + 1);
    for m1 in 0..=e {
        let c = state.coeffs[m1 as usize];
        if c == 0.0 {
            continue;
        }
        let m2 = e - m1;
        out.coeffs[m1 as usize + 1] += c * raise_amp(m1, &pair.l1);
        out.coeffs[m1 as usize] += c * raise_amp(m2, &pair.l2);
    }
    out
}

/// Δ(A₋) on a level-homogeneous state.
pub fn su11_lower(state: &Su11State, pair: &Su11Pair) -> Su11State {
    let e = state.level;
    if e == 0 {
        return Su11State::zero(0);
    }
    let mut out = Su11State::zero(e - 1);
    for m1 in 0..=e {
        let c = state.coeffs[m1 as usize];
        if c == 0.0 {
            continue;
        }
        let m2 = e - m1;
        if m1 > 0 {
            out.coeffs[m1 as usize - 1] += c * raise_amp(m1 - 1, &pair.l1);
        }
        if m2 > 0 {
            out.coeffs[m1 as usize] += c * raise_amp(m2 - 1, &pair.l2);
        }
    }
    out
}

/// Unit-norm lowest-weight vector |0, l₁₂ = l₁+l₂+k⟩, positive at m₁ = 0.
pub fn su11_lowest_weight(k: u32, pair: &Su11Pair) -> Su11State {
    let mut coeffs = vec![0.0_f64; k as usize + 1];
    coeffs[0] = 1.0;
    for m in 0..k {
        // c(m+1) = −√((k−m)(2l₂+k−m−1) / ((m+1)(2l₁+m))) c(m)
        let num = f64::from(k - m) * to_f64(&(&pair.l2 + &pair.l2 + rat_u(k - m) - Rational::one()));
        let den = f64::from(m + 1) * to_f64(&(&pair.l1 + &pair.l1 + rat_u(m)));
        coeffs[m as usize + 1] = -(num / den).sqrt() * coeffs[m as usize];
    }
    let mut state = Su11State { level: k, coeffs };
    state = state.scaled(1.0 / state.norm());
    let residual = su11_lower(&state, pair)
        .coeffs
        .iter()
        .fold(0.0_f64, |a, c| a.max(c.abs()));
    assert!(residual < 1e-12, "su(1,1) lowest-weight solve failed: {residual:e}");
    state
}

/// Coupling table: `row(m12, k)` holds ⟨m₁, E−m₁ | m₁₂, l₁₂ = l₁+l₂+k⟩ with
/// E = m₁₂ + k.
#[derive(Debug, Clone)]
pub struct Su11Table {
    pub pair: Su11Pair,
    levels: Vec<Vec<Vec<f64>>>,
}

impl Su11Table {
    pub fn max_level(&self) -> u32 {
        self.levels.len() as u32 - 1
    }

    pub fn row(&self, m12: u32, k: u32) -> &[f64] {
        &self.levels[(m12 + k) as usize][k as usize]
    }

    pub fn level_matrix(&self, level: u32) -> &Vec<Vec<f64>> {
        &self.levels[level as usize]
    }

    pub fn unitarity_residual(&self, level: u32) -> f64 {
        let m = self.level_matrix(level);
        let dim = m.len();
        let mut worst = 0.0_f64;
        for a in 0..dim {
            for b in 0..dim {
                let dot: f64 = (0..dim).map(|c| m[a][c] * m[b][c]).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Oracle coupling table for (l₁)⊗(l₂) up to level `emax`.
pub fn su11_oracle_cgc(pair: &Su11Pair, emax: u32) -> Su11Table {
    let mut levels: Vec<Vec<Vec<f64>>> = (0..=emax)
        .map(|e| vec![Vec::new(); e as usize + 1])
        .collect();
    for k in 0..=emax {
        let l12 = pair.l12(k);
        let mut state = su11_lowest_weight(k, pair);
        levels[k as usize][k as usize] = state.coeffs.clone();
        for m12 in 1..=(emax - k) {
            let raised = su11_raise(&state, pair);
            state = raised.scaled(1.0 / raise_amp(m12 - 1, &l12));
            levels[(m12 + k) as usize][k as usize] = state.coeffs.clone();
        }
    }
    Su11Table {
        pair: pair.clone(),
        levels,
    }
}

/// |⟨0,l₁,k,l₂|0,l₁₂⟩|² from the coupling orthogonality, as an exact
/// rational: (2l₁)_k / (2l₁+2l₂+k−1)_k.
///
/// Chu–Vandermonde turns the unitarity sum Σ_m C(k,m)(2l₂)_k/((2l₁)_m(2l₂)_{k−m})
/// into ₂F₁(−k, 1−k−2l₂; 2l₁; 1) = (2l₁+2l₂+k−1)_k/(2l₁)_k, so this is the
/// exact inverse of that sum. In factorial form it reads
/// (2l₁+k−1)!(2l₁+2l₂+k−2)! / ((2l₁−1)!(2l₁₂−2)!); the commonly printed
/// variant drops the `+k` in the second factorial and fails unitarity for
/// k ≥ 2 — see [`su11_vacuum_norm_report`].
pub fn su11_vacuum_norm_sq(k: u32, pair: &Su11Pair) -> Rational {
    let two_l1 = &pair.l1 + &pair.l1;
    pochhammer(&two_l1, k)
        / pochhammer(
            &(&two_l1 + &pair.l2 + &pair.l2 + rat_u(k) - Rational::one()),
            k,
        )
}

/// The printed closed form (2l₁+k−1)!(2l₁+2l₂−2)!/((2l₁−1)!(2l₁₂−2)!) in its
/// Pochhammer reading (2l₁)_k/(2l₁+2l₂−1)_{2k}, kept verbatim for the erratum
/// ledger.
pub fn su11_vacuum_norm_sq_printed(k: u32, pair: &Su11Pair) -> Rational {
    let two_l1 = &pair.l1 + &pair.l1;
    pochhammer(&two_l1, k)
        / pochhammer(
            &(&two_l1 + &pair.l2 + &pair.l2 - Rational::one()),
            2 * k,
        )
}

/// `(unitarity-consistent, printed)` vacuum norms at one point; the printed
/// variant is smaller by the factor (2l₁+2l₂−1)_k, which is 1 only at k = 0
/// (or k = 1 when l₁+l₂ = 1).
pub fn su11_vacuum_norm_report(k: u32, pair: &Su11Pair) -> (Rational, Rational) {
    (
        su11_vacuum_norm_sq(k, pair),
        su11_vacuum_norm_sq_printed(k, pair),
    )
}

/// Vacuum coefficient ⟨m, l₁, k−m, l₂ | 0, l₁₂⟩ with the positive-at-m=0
/// convention: (−1)^m √(C(k,m) (2l₂)_k / ((2l₁)_m (2l₂)_{k−m})) times the
/// positive square root of `su11_vacuum_norm_sq`.
pub fn su11_vacuum_cgc(m: u32, k: u32, pair: &Su11Pair) -> f64 {
    assert!(m <= k);
    let two_l1 = &pair.l1 + &pair.l1;
    let two_l2 = &pair.l2 + &pair.l2;
    let ratio = binomial(k, m) * pochhammer(&two_l2, k)
        / (pochhammer(&two_l1, m) * pochhammer(&two_l2, k - m));
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    sign * to_f64(&ratio).sqrt() * to_f64(&su11_vacuum_norm_sq(k, pair)).sqrt()
}

/// Coefficients in z of the closed generating-function side for the summand
/// (k, m₁₂): ₂F₁(−k, 1−k−2l₂; 2l₁; z)(1−z)^{m₁₂} times the normalizations.
pub fn su11_genfun_rhs_coeffs(k: u32, m12: u32, pair: &Su11Pair) -> Vec<f64> {
    let two_l1 = &pair.l1 + &pair.l1;
    let two_l2 = &pair.l2 + &pair.l2;
    let bracket = hyp2f1_poly(
        &(-rat_u(k)),
        &(Rational::one() - rat_u(k) - &two_l2),
        &two_l1,
    )
    .expect("terminating by construction");
    let one_minus_z = DensePoly::new(vec![Rational::one(), -Rational::one()]);
    let mut prefactor = DensePoly::one();
    for _ in 0..m12 {
        prefactor = prefactor.mul(&one_minus_z);
    }
    let poly = bracket.mul(&prefactor);
    let l12 = pair.l12(k);
    let norm = to_f64(&su11_vacuum_norm_sq(k, pair)).sqrt()
        / (to_f64(&(factorial(m12) * pochhammer(&(&l12 + &l12), m12))).sqrt()
            * to_f64(&(factorial(k) * pochhammer(&two_l2, k))).sqrt());
    (0..=(m12 + k) as usize)
        .map(|i| to_f64(&poly.coeff(i)) * norm)
        .collect()
}

/// Closed generating-function side evaluated at z.
pub fn su11_genfun_rhs(k: u32, m12: u32, pair: &Su11Pair, z: f64) -> f64 {
    let mut acc = 0.0;
    for c in su11_genfun_rhs_coeffs(k, m12, pair).into_iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Series-side coefficients from the oracle table:
/// (−1)^m ⟨m, m₁₂+k−m | m₁₂, k⟩ / √(m!(2l₁)_m (m₁₂+k−m)!(2l₂)_{m₁₂+k−m}).
pub fn su11_series_coeffs(k: u32, m12: u32, table: &Su11Table) -> Vec<f64> {
    let pair = &table.pair;
    let two_l1 = &pair.l1 + &pair.l1;
    let two_l2 = &pair.l2 + &pair.l2;
    let row = table.row(m12, k);
    (0..=(m12 + k))
        .map(|m| {
            let mp = m12 + k - m;
            let norm = to_f64(&(factorial(m) * pochhammer(&two_l1, m))).sqrt()
                * to_f64(&(factorial(mp) * pochhammer(&two_l2, mp))).sqrt();
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            sign * row[m as usize] / norm
        })
        .collect()
}

/// Max coefficient residual between the closed form and the oracle series.
pub fn su11_verify(k: u32, m12: u32, table: &Su11Table) -> f64 {
    let closed = su11_genfun_rhs_coeffs(k, m12, &table.pair);
    let series = su11_series_coeffs(k, m12, table);
    closed
        .iter()
        .zip(&series)
        .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn half_pair() -> Su11Pair {
        Su11Pair::new(rat(1, 2), rat(1, 2))
    }

    #[test]
    fn vacuum_norm_small_cases() {
        assert_eq!(su11_vacuum_norm_sq(0, &half_pair()), rat_int(1));
        assert_eq!(su11_vacuum_norm_sq(1, &half_pair()), rat(1, 2));
    }

    #[test]
    fn vacuum_norm_matches_factorial_form() {
        // for 2l integer the Pochhammer ratio equals the factorial expression
        // (2l₁+k−1)!(2l₁+2l₂+k−2)!/((2l₁−1)!(2l₁₂−2)!)
        for (l1, l2) in [(rat(1, 2), rat(1, 2)), (rat_int(1), rat(3, 2)), (rat(3, 2), rat_int(1))]
        {
            let pair = Su11Pair::new(l1, l2);
            let a = to_f64(&(&pair.l1 + &pair.l1));
            let b = to_f64(&(&pair.l2 + &pair.l2));
            let fact = |x: f64| statrs::function::gamma::gamma(x + 1.0);
            for k in 0..=6u32 {
                let l12 = to_f64(&pair.l12(k));
                let expected = fact(a + f64::from(k) - 1.0) * fact(a + b + f64::from(k) - 2.0)
                    / (fact(a - 1.0) * fact(2.0 * l12 - 2.0));
                let got = to_f64(&su11_vacuum_norm_sq(k, &pair));
                assert!(
                    (got - expected).abs() <= 1e-12 * expected.abs(),
                    "k={k}: {got} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn printed_vacuum_norm_drifts_by_a_pochhammer_factor() {
        // at l1 = l2 = 1/2 the factor (2l1+2l2-1)_k = k! is 1 up to k = 1
        let pair = half_pair();
        for k in 0..=1u32 {
            let (anchor, printed) = su11_vacuum_norm_report(k, &pair);
            assert_eq!(anchor, printed, "k={k}");
        }
        for k in 2..=5u32 {
            let (anchor, printed) = su11_vacuum_norm_report(k, &pair);
            let drift = pochhammer(
                &(&pair.l1 + &pair.l1 + &pair.l2 + &pair.l2 - Rational::one()),
                k,
            );
            assert_eq!(anchor, printed * drift, "k={k}");
        }
    }

    #[test]
    fn vacuum_norm_is_the_unitarity_anchor() {
        // Σ_m C(k,m)(2l₂)_k/((2l₁)_m(2l₂)_{k−m}) · norm² = 1 exactly
        for (l1, l2) in [(rat(1, 2), rat_int(1)), (rat(3, 2), rat(1, 2))] {
            let pair = Su11Pair::new(l1, l2);
            let two_l1 = &pair.l1 + &pair.l1;
            let two_l2 = &pair.l2 + &pair.l2;
            for k in 0..=8u32 {
                let total: Rational = (0..=k)
                    .map(|m| {
                        binomial(k, m) * pochhammer(&two_l2, k)
                            / (pochhammer(&two_l1, m) * pochhammer(&two_l2, k - m))
                    })
                    .sum();
                assert_eq!(total * su11_vacuum_norm_sq(k, &pair), rat_int(1), "k={k}");
            }
        }
    }

    #[test]
    fn oracle_matches_vacuum_closed_form() {
        for (l1, l2) in [(rat(1, 2), rat(1, 2)), (rat_int(1), rat(3, 2))] {
            let pair = Su11Pair::new(l1, l2);
            for k in 0..=6u32 {
                let state = su11_lowest_weight(k, &pair);
                for m in 0..=k {
                    let closed = su11_vacuum_cgc(m, k, &pair);
                    assert!(
                        (state.coeffs[m as usize] - closed).abs() < 1e-12,
                        "k={k} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_unitarity() {
        let pair = Su11Pair::new(rat(3, 2), rat(1, 2));
        let table = su11_oracle_cgc(&pair, 8);
        for e in 0..=8 {
            assert!(table.unitarity_residual(e) < 1e-11, "E={e}");
        }
    }

    #[test]
    fn generating_function_trivial_case() {
        let table = su11_oracle_cgc(&half_pair(), 2);
        assert!(su11_verify(0, 0, &table) < 1e-15);
        // both sides are exactly 1 at (k, m₁₂) = (0,0)
        assert!((su11_genfun_rhs(0, 0, &half_pair(), 0.37) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn generating_function_low_levels() {
        let table = su11_oracle_cgc(&half_pair(), 4);
        for k in 0..=2u32 {
            for m12 in 0..=2u32 {
                let r = su11_verify(k, m12, &table);
                assert!(r < 1e-12, "k={k} m12={m12}: {r:e}");
            }
        }
    }
}
