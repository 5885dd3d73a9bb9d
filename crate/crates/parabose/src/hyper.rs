//! Terminating generalized hypergeometric series over exact rationals.
//!
//! ```text
//! ₚF_q(a₁,…,aₚ; b₁,…,b_q; z) = Σ_m (a₁)_m⋯(aₚ)_m / ((b₁)_m⋯(b_q)_m) · z^m/m!
//! ```
//!
//! Only terminating series are admitted: at least one numerator parameter
//! must be a non-positive integer, and the sum runs to the earliest such
//! termination index. Within that range a vanishing denominator factor is a
//! domain error (the value would involve division by zero), while vanishing
//! numerator factors merely truncate.

use crate::arith::{as_nonpositive_integer, Rational};
use crate::poly::DensePoly;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum HyperError {
    #[error("series does not terminate: no numerator parameter is a non-positive integer")]
    NonTerminating,
    #[error("denominator parameter {param} produces a zero factor at term {term}")]
    DenominatorZero { param: String, term: u64 },
}

/// A terminating hypergeometric evaluation request.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeomSpec {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
    pub argument: Rational,
}

impl HypergeomSpec {
    pub fn new(
        numerator: Vec<Rational>,
        denominator: Vec<Rational>,
        argument: Rational,
    ) -> Self {
        Self {
            numerator,
            denominator,
            argument,
        }
    }

    /// Earliest index m for which a numerator Pochhammer vanishes, so the
    /// series is Σ_{m=0}^{M}; None when no parameter terminates it.
    pub fn terminating_index(&self) -> Option<u64> {
        self.numerator
            .iter()
            .filter_map(as_nonpositive_integer)
            .min()
    }

    /// Exact value of the terminating series.
    pub fn eval(&self) -> Result<Rational, HyperError> {
        Ok(self.series_coeffs()?.iter().sum())
    }

    /// Coefficients `c_m` of `z^m` in the terminating series, with the
    /// argument already raised to the power (i.e. the series evaluated
    /// term-by-term); `eval` is their sum.
    fn series_coeffs(&self) -> Result<Vec<Rational>, HyperError> {
        let m_max = self.terminating_index().ok_or(HyperError::NonTerminating)?;
        let mut coeffs = Vec::with_capacity(m_max as usize + 1);
        let mut term = Rational::one();
        for m in 0..=m_max {
            coeffs.push(term.clone());
            if m == m_max {
                break;
            }
            let shift = Rational::from_integer(m.into());
            for a in &self.numerator {
                term *= a + &shift;
            }
            for b in &self.denominator {
                let factor = b + &shift;
                if factor.is_zero() {
                    return Err(HyperError::DenominatorZero {
                        param: b.to_string(),
                        term: m + 1,
                    });
                }
                term /= factor;
            }
            term *= &self.argument;
            term /= Rational::from_integer((m + 1).into());
        }
        Ok(coeffs)
    }
}

/// Exact ₂F₁(a, b; c; z) for terminating series.
pub fn hyp2f1(a: &Rational, b: &Rational, c: &Rational, z: &Rational) -> Result<Rational, HyperError> {
    HypergeomSpec::new(vec![a.clone(), b.clone()], vec![c.clone()], z.clone()).eval()
}

/// Exact ₃F₂(a₁, a₂, a₃; b₁, b₂; z) for terminating series.
pub fn hyp3f2(
    a: [&Rational; 3],
    b: [&Rational; 2],
    z: &Rational,
) -> Result<Rational, HyperError> {
    HypergeomSpec::new(
        vec![a[0].clone(), a[1].clone(), a[2].clone()],
        vec![b[0].clone(), b[1].clone()],
        z.clone(),
    )
    .eval()
}

/// The terminating ₂F₁(a, b; c; w) as an exact polynomial in w.
pub fn hyp2f1_poly(a: &Rational, b: &Rational, c: &Rational) -> Result<DensePoly<Rational>, HyperError> {
    let spec = HypergeomSpec::new(
        vec![a.clone(), b.clone()],
        vec![c.clone()],
        Rational::one(),
    );
    Ok(DensePoly::new(spec.series_coeffs()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn zero_numerator_parameter_truncates_at_once() {
        let v = hyp3f2(
            [&rat_int(0), &rat(7, 3), &rat(-5, 2)],
            [&rat(1, 3), &rat(9, 4)],
            &rat_int(1),
        )
        .unwrap();
        assert_eq!(v, rat_int(1));
    }

    #[test]
    fn two_term_series() {
        // ₂F₁(−1, b; c; z) = 1 − bz/c
        let (b, c, z) = (rat(5, 3), rat(7, 2), rat(2, 9));
        let v = hyp2f1(&rat_int(-1), &b, &c, &z).unwrap();
        assert_eq!(v, rat_int(1) - &b * &z / &c);
        // ₃F₂(−1, a, b; c, d; 1) = 1 − ab/(cd)
        let (a, b2, c2, d) = (rat(3, 4), rat(-7, 5), rat(11, 6), rat(1, 2));
        let v = hyp3f2([&rat_int(-1), &a, &b2], [&c2, &d], &rat_int(1)).unwrap();
        assert_eq!(v, rat_int(1) - &a * &b2 / (&c2 * &d));
    }

    #[test]
    fn non_terminating_is_rejected() {
        let err = hyp2f1(&rat(1, 2), &rat(1, 3), &rat(1, 4), &rat_int(1)).unwrap_err();
        assert_eq!(err, HyperError::NonTerminating);
    }

    #[test]
    fn denominator_zero_before_termination_is_a_domain_error() {
        // c = −1 hits a zero factor at term 2, before termination at m = 3
        let err = hyp2f1(&rat_int(-3), &rat(1, 2), &rat_int(-1), &rat_int(1)).unwrap_err();
        assert!(matches!(err, HyperError::DenominatorZero { term: 2, .. }));
        // but a numerator −1 terminates first, so the same c is harmless
        let v =
            hyp3f2([&rat_int(-1), &rat(1, 2), &rat_int(1)], [&rat_int(-1), &rat_int(1)], &rat_int(1))
                .unwrap();
        assert_eq!(v, rat(3, 2));
    }

    #[test]
    fn polynomial_form_matches_eval() {
        let (a, b, c) = (rat_int(-4), rat(5, 2), rat(4, 3));
        let poly = hyp2f1_poly(&a, &b, &c).unwrap();
        assert_eq!(poly.degree(), Some(4));
        for z in [rat(1, 3), rat(-2, 7), rat_int(2)] {
            assert_eq!(poly.eval(&z), hyp2f1(&a, &b, &c, &z).unwrap());
        }
    }
}
