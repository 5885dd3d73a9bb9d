//! Exact rational arithmetic and μ-deformed combinatorics.
//!
//! The μ-number
//!
//! ```text
//! [n]_μ = n + μ(1 − (−1)ⁿ)
//! ```
//!
//! (so `[n]_μ = n` for even n and `n + 2μ` for odd n) underlies every
//! factorial-like quantity in this crate: μ-factorials `[n]_μ!`, falling
//! products `[j]_μ[j−1]_μ…[j−n+1]_μ`, and the parity sign
//! `(−1)^{nj − n(n+1)/2}` from the coupled-vacuum recursion. All of it is
//! exact over arbitrary-precision rationals; callers convert to `f64` only
//! when a square root is unavoidable.

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar, always reduced, denominator > 0.
pub type Rational = num::BigRational;

/// The rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The unsigned integer `n` as a rational.
pub fn rat_u(n: u32) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, num::rational::ParseRatioError> {
    s.trim().parse()
}

/// `r^k` for non-negative `k`.
pub fn rat_pow(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

/// Some(m) when `r` is an integer ≤ 0 with `m = −r`; used to detect
/// terminating hypergeometric parameters.
pub fn as_nonpositive_integer(r: &Rational) -> Option<u64> {
    if r.is_integer() && !r.is_positive() {
        (-r).to_integer().to_u64()
    } else {
        None
    }
}

/// μ-number `[n]_μ = n + μ(1 − (−1)ⁿ)`.
pub fn mu_number(n: u32, mu: &Rational) -> Rational {
    if n % 2 == 0 {
        rat_u(n)
    } else {
        rat_u(n) + mu + mu
    }
}

/// μ-factorial `[n]_μ! = [n]_μ[n−1]_μ…[1]_μ`; the empty product is 1.
pub fn mu_factorial(n: u32, mu: &Rational) -> Rational {
    let mut acc = Rational::one();
    for i in 1..=n {
        acc *= mu_number(i, mu);
    }
    acc
}

/// Falling product `[j]_μ[j−1]_μ…[j−n+1]_μ` of `n` factors; empty for n = 0.
///
/// Requires `n ≤ j + 1` (n = j + 1 picks up the factor `[0]_μ = 0`).
pub fn mu_falling(j: u32, n: u32, mu: &Rational) -> Rational {
    assert!(n <= j + 1, "mu_falling: n = {n} exceeds j + 1 = {}", j + 1);
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= mu_number(j - i, mu);
    }
    acc
}

/// Pochhammer symbol (rising factorial) `(a)_n = a(a+1)…(a+n−1)`; `(a)₀ = 1`.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient with a rational upper argument:
/// `C(a, k) = (a−k+1)_k / k!`.
pub fn binomial_rat(a: &Rational, k: u32) -> Rational {
    pochhammer(&(a - rat_u(k) + Rational::one()), k) / factorial(k)
}

/// Integer binomial coefficient `C(n, k)`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    binomial_rat(&rat_u(n), k)
}

/// The sign `(−1)^{nj − n(n+1)/2}`, equal to `(−1)^k` for n = 2k and
/// `(−1)^{j+k+1}` for n = 2k + 1.
pub fn parity_sign(n: u32, j: u32) -> i32 {
    let n = u64::from(n);
    let j = u64::from(j);
    // (−1)^{a−b} = (−1)^{a+b}
    let exponent = (n * j) % 2 + (n * (n + 1) / 2) % 2;
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu_grid() -> Vec<Rational> {
        vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(3, 2)]
    }

    #[test]
    fn mu_number_cases() {
        let mu = rat(1, 2);
        assert_eq!(mu_number(0, &mu), rat_int(0));
        assert_eq!(mu_number(1, &mu), rat_int(2));
        assert_eq!(mu_number(4, &rat(3, 4)), rat_int(4));
        // odd n picks up 2μ
        assert_eq!(mu_number(3, &rat(1, 4)), rat(7, 2));
    }

    #[test]
    fn mu_factorial_cases() {
        let mu = rat(1, 2);
        assert_eq!(mu_factorial(0, &mu), rat_int(1));
        // [3][2][1] = 4·2·2
        assert_eq!(mu_factorial(3, &mu), rat_int(16));
        assert_eq!(mu_factorial(4, &rat(1, 4)), rat_int(42));
    }

    #[test]
    fn mu_falling_cases() {
        let mu = rat(1, 2);
        assert_eq!(mu_falling(5, 0, &mu), rat_int(1));
        // [3][2] = 4·2
        assert_eq!(mu_falling(3, 2, &mu), rat_int(8));
        let mu = rat(1, 4);
        assert_eq!(mu_falling(5, 5, &mu), mu_factorial(5, &mu));
        // n = j + 1 hits the zero factor [0]
        assert_eq!(mu_falling(3, 4, &mu), rat_int(0));
    }

    #[test]
    #[should_panic(expected = "mu_falling")]
    fn mu_falling_rejects_overlong_products() {
        mu_falling(3, 5, &rat(1, 2));
    }

    #[test]
    fn pochhammer_cases() {
        assert_eq!(pochhammer(&rat(7, 3), 0), rat_int(1));
        assert_eq!(pochhammer(&rat_int(3), 2), rat_int(12));
        // (1/2)(3/2)(5/2)
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
    }

    #[test]
    fn parity_sign_cases() {
        assert_eq!(parity_sign(0, 7), 1);
        assert_eq!(parity_sign(2, 0), -1);
        assert_eq!(parity_sign(1, 1), 1);
    }

    #[test]
    fn parity_sign_matches_brute_force_and_closed_forms() {
        for n in 0..=50u32 {
            for j in 0..=50u32 {
                let exponent = i64::from(n) * i64::from(j)
                    - i64::from(n) * (i64::from(n) + 1) / 2;
                let brute = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };
                assert_eq!(parity_sign(n, j), brute, "n={n} j={j}");
                let k = n / 2;
                let closed = if n % 2 == 0 {
                    if k % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                } else if (j + k + 1) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(parity_sign(n, j), closed, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn mu_factorial_splits_into_pochhammers() {
        // [2k]_μ!  = 2^{2k}   k! (1/2+μ)_k
        // [2k+1]_μ! = 2^{2k+1} k! (3/2+μ)_k (1/2+μ)
        for mu in mu_grid() {
            for n in 0..=24u32 {
                let k = n / 2;
                let expected = if n % 2 == 0 {
                    rat_pow(&rat_int(2), n)
                        * factorial(k)
                        * pochhammer(&(rat(1, 2) + &mu), k)
                } else {
                    rat_pow(&rat_int(2), n)
                        * factorial(k)
                        * pochhammer(&(rat(3, 2) + &mu), k)
                        * (rat(1, 2) + &mu)
                };
                assert_eq!(mu_factorial(n, &mu), expected, "n={n} mu={mu}");
            }
        }
    }

    #[test]
    fn mu_falling_complements_mu_factorial() {
        // [j]_μ[j−1]_μ…[j−n+1]_μ · [j−n]_μ! = [j]_μ!
        for mu in mu_grid() {
            for j in 0..=12u32 {
                for n in 0..=j {
                    assert_eq!(
                        mu_falling(j, n, &mu) * mu_factorial(j - n, &mu),
                        mu_factorial(j, &mu),
                        "j={j} n={n} mu={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn mu_falling_splits_into_pochhammers() {
        // Parity-resolved Pochhammer form of the falling product. The
        // (n odd, j odd) branch needs the factor (j/2 + μ): the first factor
        // [j]_μ = j + 2μ of the product is otherwise unaccounted for. The
        // erratum ledger records this correction; the other three branches
        // are as tabulated.
        for mu in mu_grid() {
            for j in 0..=12u32 {
                for n in 0..=j {
                    let k = n / 2;
                    let jh = rat_u(j) / rat_int(2);
                    let expected = match (n % 2, j % 2) {
                        (0, 0) => {
                            rat_pow(&rat_int(2), n)
                                * pochhammer(&(-&jh), k)
                                * pochhammer(&(rat(1, 2) - &jh - &mu), k)
                        }
                        (1, 0) => {
                            rat_pow(&rat_int(2), n)
                                * pochhammer(&(Rational::one() - &jh), k)
                                * pochhammer(&(rat(1, 2) - &jh - &mu), k)
                                * &jh
                        }
                        (0, 1) => {
                            rat_pow(&rat_int(2), n)
                                * pochhammer(&(rat(1, 2) - &jh), k)
                                * pochhammer(&(-&jh - &mu), k)
                        }
                        (1, 1) => {
                            rat_pow(&rat_int(2), n)
                                * pochhammer(&(Rational::one() - &jh - &mu), k)
                                * pochhammer(&(rat(1, 2) - &jh), k)
                                * (&jh + &mu)
                        }
                        _ => unreachable!(),
                    };
                    assert_eq!(mu_falling(j, n, &mu), expected, "j={j} n={n} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), rat_int(10));
        assert_eq!(binomial(3, 5), rat_int(0));
        // C(7/2, 2) = (7/2)(5/2)/2
        assert_eq!(binomial_rat(&rat(7, 2), 2), rat(35, 8));
    }

    #[test]
    fn rational_parsing_round_trips() {
        let r = parse_rational("3/4").unwrap();
        assert_eq!(r, rat(3, 4));
        assert_eq!(parse_rational("-2").unwrap(), rat_int(-2));
        assert_eq!(parse_rational(" 6/8 ").unwrap(), rat(3, 4));
    }
}
