//! Classical and −1-scheme orthogonal polynomials.
//!
//! Laguerre, Jacobi and generalized Hermite polynomials are built with exact
//! rational coefficients (normalization constants involving Γ enter as `f64`
//! multipliers at the end). The dual −1 Hahn polynomials `R_n^{(−1)}(x; η, ξ, N)`
//! are produced monic from their three-term recurrence
//!
//! ```text
//! R_{n+1} + b_n R_n + u_n R_{n−1} = x R_n,
//! u_n = 4[n]_ξ [N−n+1]_η,   b_n = 2([n]_ξ + [N−n]_η) − 2η − 2ξ − 2N − 1,
//! ```
//!
//! together with their full discrete orthogonality data (normalization κ₀,
//! grid points, weights) and the equivalent terminating ₃F₂ evaluation.
//! Everything dual-Hahn-related is exact rational arithmetic.

use crate::arith::{
    factorial, mu_number, pochhammer, rat, rat_int, rat_u, to_f64, Rational,
};
use crate::hyper::{hyp3f2, HyperError};
use crate::poly::DensePoly;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum OrthoError {
    #[error("degenerate dual -1 Hahn data: {quantity} vanishes for eta={eta}, xi={xi}, N={n}")]
    VanishingDenominator {
        quantity: &'static str,
        eta: String,
        xi: String,
        n: u32,
    },
}

/// Γ(r) for a rational argument, evaluated in `f64`.
pub fn gamma_rat(r: &Rational) -> f64 {
    statrs::function::gamma::gamma(to_f64(r))
}

/// Laguerre polynomial `L_n^α` with exact rational coefficients.
pub fn laguerre_poly(n: u32, alpha: &Rational) -> DensePoly<Rational> {
    // L_n^α(x) = Σ_i (−1)^i C(n+α, n−i) x^i / i!
    let coeffs = (0..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
            sign * crate::arith::binomial_rat(&(rat_u(n) + alpha), n - i) / factorial(i)
        })
        .collect();
    DensePoly::new(coeffs)
}

/// Value of `L_n^α(x)`.
pub fn laguerre(n: u32, alpha: &Rational, x: &Rational) -> Rational {
    laguerre_poly(n, alpha).eval(x)
}

/// Jacobi polynomial `P_n^{(α,β)}` with exact rational coefficients.
pub fn jacobi_poly(n: u32, alpha: &Rational, beta: &Rational) -> DensePoly<Rational> {
    // P_n^{(α,β)}(x) = Σ_s C(n+α, n−s) C(n+β, s) ((x−1)/2)^s ((x+1)/2)^{n−s}
    let half = rat(1, 2);
    let xm = DensePoly::new(vec![-&half, half.clone()]);
    let xp = DensePoly::new(vec![half.clone(), half.clone()]);
    let mut acc = DensePoly::zero();
    for s in 0..=n {
        let c = crate::arith::binomial_rat(&(rat_u(n) + alpha), n - s)
            * crate::arith::binomial_rat(&(rat_u(n) + beta), s);
        let mut term = DensePoly::constant(c);
        for _ in 0..s {
            term = term.mul(&xm);
        }
        for _ in 0..(n - s) {
            term = term.mul(&xp);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Value of `P_n^{(α,β)}(x)`.
pub fn jacobi(n: u32, alpha: &Rational, beta: &Rational, x: &Rational) -> Rational {
    jacobi_poly(n, alpha, beta).eval(x)
}

/// Generalized Hermite polynomial without its Γ-normalization: for
/// n = 2k + p, the exact rational polynomial `x^p L_k^{μ−1/2+p}(x²)`.
pub fn generalized_hermite_raw(n: u32, mu: &Rational) -> DensePoly<Rational> {
    let k = n / 2;
    let p = n % 2;
    let lag = laguerre_poly(k, &(mu - rat(1, 2) + rat_u(p)));
    // substitute x² and attach the parity prefactor x^p
    let mut coeffs = vec![Rational::zero(); 2 * k as usize + p as usize + 1];
    for (i, c) in lag.coeffs().iter().enumerate() {
        coeffs[2 * i + p as usize] = c.clone();
    }
    DensePoly::new(coeffs)
}

/// Normalization carried by `H_n^μ`: `(−1)^k √(k!/Γ(k+p+μ+1/2))` with
/// n = 2k + p. `generalized_hermite` = this times `generalized_hermite_raw`.
pub fn hermite_norm(n: u32, mu: &Rational) -> f64 {
    let k = n / 2;
    let p = n % 2;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let gamma = gamma_rat(&(rat_u(k) + rat_u(p) + mu + rat(1, 2)));
    sign * (to_f64(&factorial(k)) / gamma).sqrt()
}

/// Generalized Hermite polynomial `H_n^μ` (coefficients in `f64`; the caller
/// pairs it with the implicit Gaussian `e^{−x²/2}`).
pub fn generalized_hermite(n: u32, mu: &Rational) -> DensePoly<f64> {
    let norm = hermite_norm(n, mu);
    generalized_hermite_raw(n, mu).to_f64().scale(&norm)
}

/// Recurrence coefficient `u_n = 4[n]_ξ[N−n+1]_η`.
pub fn dm1h_u(n: u32, eta: &Rational, xi: &Rational, big_n: u32) -> Rational {
    assert!(n >= 1 && n <= big_n + 1);
    rat_int(4) * mu_number(n, xi) * mu_number(big_n - n + 1, eta)
}

/// Recurrence coefficient `b_n = 2([n]_ξ + [N−n]_η) − 2η − 2ξ − 2N − 1`.
pub fn dm1h_b(n: u32, eta: &Rational, xi: &Rational, big_n: u32) -> Rational {
    assert!(n <= big_n);
    rat_int(2) * (mu_number(n, xi) + mu_number(big_n - n, eta))
        - rat_int(2) * eta
        - rat_int(2) * xi
        - rat_u(2 * big_n)
        - Rational::one()
}

/// Monic dual −1 Hahn polynomial `R_n^{(−1)}(x; η, ξ, N)` by the three-term
/// recurrence, exact in the rationals. Valid for 0 ≤ n ≤ N + 1.
pub fn dual_m1_hahn(n: u32, eta: &Rational, xi: &Rational, big_n: u32) -> DensePoly<Rational> {
    assert!(n <= big_n + 1, "dual -1 Hahn degree n = {n} exceeds N + 1");
    let x = DensePoly::monomial(Rational::one(), 1);
    let mut prev = DensePoly::zero(); // R_{-1}
    let mut cur = DensePoly::one(); // R_0
    for m in 0..n {
        // R_{m+1} = (x − b_m) R_m − u_m R_{m−1}
        let mut next = x.mul(&cur).sub(&cur.scale(&dm1h_b(m, eta, xi, big_n)));
        if m >= 1 {
            next = next.sub(&prev.scale(&dm1h_u(m, eta, xi, big_n)));
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Orthogonality data of the dual −1 Hahn family: Σ_j w_j R_n(y_j) R_m(y_j)
/// = δ_{nm} κ₀ u₁…u_n, with N + 1 grid points and weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Dm1hData {
    pub eta: Rational,
    pub xi: Rational,
    pub big_n: u32,
    pub kappa0: Rational,
    pub grid: Vec<Rational>,
    pub weights: Vec<Rational>,
}

/// Normalization κ₀, grid points y_s and weights w_{2s+q}, all exact.
pub fn dm1h_data(eta: &Rational, xi: &Rational, big_n: u32) -> Result<Dm1hData, OrthoError> {
    let one = Rational::one();
    let half = rat(1, 2);
    let degenerate = |quantity: &'static str| OrthoError::VanishingDenominator {
        quantity,
        eta: eta.to_string(),
        xi: xi.to_string(),
        n: big_n,
    };

    let (kappa0, grid, weights) = if big_n % 2 == 0 {
        let nh = big_n / 2; // N/2
        let kden = pochhammer(&(&half - xi - rat_u(nh)), nh);
        if kden.is_zero() {
            return Err(degenerate("kappa0 denominator"));
        }
        let kappa0 = pochhammer(&(-eta - xi - rat_u(big_n)), nh) / kden;
        let grid = (0..=big_n)
            .map(|s| {
                let base = -rat_int(2) * eta - rat_int(2) * xi - rat_u(2 * big_n)
                    + rat_u(2 * s)
                    - &one;
                if s % 2 == 0 {
                    base
                } else {
                    -base
                }
            })
            .collect();
        let weights = (0..=big_n)
            .map(|idx| {
                let s = idx / 2;
                let q = idx % 2;
                let den = pochhammer(&(&half - xi - rat_u(nh)), s)
                    * pochhammer(&(-eta - xi - rat_u(nh)), s + q);
                if den.is_zero() {
                    return Err(degenerate("weight denominator"));
                }
                let num = pochhammer(&(-rat_u(nh)), s + q) / factorial(s)
                    * pochhammer(&(&half - eta - rat_u(nh)), s)
                    * pochhammer(&(-eta - xi - rat_u(big_n)), s);
                let sign = if s % 2 == 0 { one.clone() } else { -&one };
                Ok(sign * num / den)
            })
            .collect::<Result<Vec<_>, _>>()?;
        (kappa0, grid, weights)
    } else {
        let nh = (big_n + 1) / 2; // (N+1)/2
        let kden = pochhammer(&(eta + &half), nh);
        if kden.is_zero() {
            return Err(degenerate("kappa0 denominator"));
        }
        let kappa0 = pochhammer(&(eta + xi + &one), nh) / kden;
        let grid = (0..=big_n)
            .map(|s| {
                let base = rat_int(2) * eta + rat_int(2) * xi + rat_u(2 * s) + &one;
                if s % 2 == 0 {
                    base
                } else {
                    -base
                }
            })
            .collect();
        let weights = (0..=big_n)
            .map(|idx| {
                let s = idx / 2;
                let q = idx % 2;
                let den = pochhammer(&(eta + &half), s + q)
                    * pochhammer(&(eta + xi + rat_u(big_n) / rat_int(2) + rat(3, 2)), s);
                if den.is_zero() {
                    return Err(degenerate("weight denominator"));
                }
                let num = pochhammer(&(-rat_u((big_n - 1) / 2)), s) / factorial(s)
                    * pochhammer(&(xi + &half), s + q)
                    * pochhammer(&(eta + xi + &one), s);
                let sign = if s % 2 == 0 { one.clone() } else { -&one };
                Ok(sign * num / den)
            })
            .collect::<Result<Vec<_>, _>>()?;
        (kappa0, grid, weights)
    };

    Ok(Dm1hData {
        eta: eta.clone(),
        xi: xi.clone(),
        big_n,
        kappa0,
        grid,
        weights,
    })
}

/// `R_n^{(−1)}(y; η, ξ, N)` through its terminating ₃F₂ representation, at the
/// natural argument y of the recurrence (the unit shift between the two
/// conventions is applied internally).
///
/// In the shifted variable x = y + 1 the recurrence becomes sign-alternating
/// (`b'_m = (−1)^m (b_0 + 1)`), so even degrees are even polynomials of x and
/// odd degrees carry the common linear factor `x − b_0 − 1`. The even/odd
/// cofactors are dual Hahn polynomials on the quadratic lattice in x²/16,
/// which pins the ₃F₂ data below; see `display_hyper_mismatch` for how this
/// differs from the commonly tabulated parameter set (the erratum ledger
/// records the discrepancy, and `hyper_form_matches_recurrence_on_grid`
/// certifies the version used here against the recurrence).
pub fn dual_m1_hahn_hyper(
    n: u32,
    y: &Rational,
    eta: &Rational,
    xi: &Rational,
    big_n: u32,
) -> Result<Rational, HyperError> {
    let x = y + Rational::one();
    let k = n / 2;
    let quarter = &x / rat_int(4);
    let two = rat_int(2);

    let delta = if big_n % 2 == 0 {
        (Rational::one() + xi - eta) / &two
    } else {
        (eta + xi + Rational::one()) / &two
    };
    let d1 = if big_n % 2 == 0 {
        (Rational::one() - &two * eta - rat_u(big_n)) / &two
    } else {
        (Rational::one() - rat_u(big_n)) / &two
    };
    let d2 = if n % 2 == 0 { xi + rat(1, 2) } else { xi + rat(3, 2) };
    let gamma = crate::arith::rat_pow(&rat_int(16), k)
        * pochhammer(&d1, k)
        * pochhammer(&d2, k);
    let a = [&(-rat_u(k)), &(&delta + &quarter), &(&delta - &quarter)];
    let f = hyp3f2(a, [&d1, &d2], &Rational::one())?;
    if n % 2 == 0 {
        Ok(gamma * f)
    } else {
        // x − (b_0 + 1): x + 2η + 2ξ for N even, x − 2η + 2ξ for N odd
        let linear = &x - dm1h_b(0, eta, xi, big_n) - Rational::one();
        Ok(gamma * linear * f)
    }
}

/// Tabulated-vs-recurrence discrepancy of the explicit forms, for the erratum
/// ledger: evaluates the commonly printed ₃F₂ parameter set (prefactor index
/// read as k) and the recurrence at one grid point, returning
/// `(printed, recurrence)`. The two disagree for degrees ≥ 1 generically.
pub fn display_hyper_mismatch(
    n: u32,
    y: &Rational,
    eta: &Rational,
    xi: &Rational,
    big_n: u32,
) -> (Option<Rational>, Rational) {
    let x = y + Rational::one();
    let k = n / 2;
    let quarter = &x / rat_int(4);
    let two = rat_int(2);
    let printed = if big_n % 2 == 0 {
        let delta = (eta + xi + rat_u(big_n)) / &two;
        let a = [&(-rat_u(k)), &(&delta + &quarter), &(&delta - &quarter)];
        let d2 = (Rational::one() - &two * eta - rat_u(big_n)) / &two;
        if n % 2 == 0 {
            let d1 = -rat_u(big_n) / &two;
            let gamma =
                crate::arith::rat_pow(&rat_int(16), k) * pochhammer(&d1, k) * pochhammer(&d2, k);
            hyp3f2(a, [&d1, &d2], &Rational::one()).ok().map(|f| gamma * f)
        } else {
            let d1 = Rational::one() - rat_u(big_n) / &two;
            let gamma = crate::arith::rat_pow(&rat_int(16), k)
                * pochhammer(&((Rational::one() - rat_u(big_n)) / &two), k)
                * pochhammer(&d2, k);
            let linear = &x - &two * eta - &two * xi;
            hyp3f2(a, [&d1, &d2], &Rational::one())
                .ok()
                .map(|f| gamma * linear * f)
        }
    } else {
        let delta = (eta + xi + Rational::one()) / &two;
        let a = [&(-rat_u(k)), &(&delta + &quarter), &(&delta - &quarter)];
        let d1 = (Rational::one() - rat_u(big_n)) / &two;
        if n % 2 == 0 {
            let d2 = eta + Rational::one() + rat_u(big_n) / &two;
            let gamma =
                crate::arith::rat_pow(&rat_int(16), k) * pochhammer(&d1, k)
                    * pochhammer(&(eta + rat(1, 2)), k);
            hyp3f2(a, [&d1, &d2], &Rational::one()).ok().map(|f| gamma * f)
        } else {
            let d2 = eta + (rat_u(big_n) + rat_int(3)) / &two;
            let gamma = crate::arith::rat_pow(&rat_int(16), k)
                * pochhammer(&d1, k)
                * pochhammer(&(eta + rat(3, 2)), k);
            let linear = &x + &two * eta - &two * xi;
            hyp3f2(a, [&d1, &d2], &Rational::one())
                .ok()
                .map(|f| gamma * linear * f)
        }
    };
    let recurrence = dual_m1_hahn(n, eta, xi, big_n).eval(y);
    (printed, recurrence)
}
