//! Dense polynomials in one and two variables, generic over the scalar.
//!
//! Two scalar types are used throughout the crate: exact [`Rational`]
//! coefficients wherever the quantities are rational, and `f64` wherever a
//! square root or Γ-normalization has entered. The [`Scalar`] trait is the
//! minimal interface both need; polynomial algebra (including the reflection
//! and odd-part shifts used by Dunkl operators) is written once.

use crate::arith::{to_f64, Rational};
use num::{One, Zero};
use std::fmt::Debug;

/// Minimal scalar interface for polynomial coefficients.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Injects an exact rational constant (μ parameters, ½ factors, …).
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }
}

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// The representation is kept trimmed: the trailing coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Debug)]
pub struct DensePoly<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> DensePoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&rhs.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(Scalar::neg).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    /// Multiplication by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| {
                    c.mul(&T::from_rational(&crate::arith::rat_int(k as i64)))
                })
                .collect(),
        )
    }

    /// `p(−x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { c.neg() })
                .collect(),
        )
    }

    /// `(p(x) − p(−x)) / x`, always an exact polynomial: twice the odd part,
    /// shifted down one degree.
    pub fn odd_shift_down(&self) -> Self {
        let mut out = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k % 2 == 1 {
                while out.len() < k - 1 {
                    out.push(T::zero());
                }
                out.push(c.add(c));
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> DensePoly<U> {
        DensePoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl DensePoly<Rational> {
    pub fn to_f64(&self) -> DensePoly<f64> {
        self.map(to_f64)
    }
}

impl DensePoly<f64> {
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Dense bivariate polynomial; `coeff(i, j)` is the coefficient of `x^i y^j`.
#[derive(Clone, Debug)]
pub struct Poly2<T: Scalar> {
    /// Row i holds the coefficients of x^i, indexed by the power of y.
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> PartialEq for Poly2<T> {
    fn eq(&self, other: &Self) -> bool {
        let nx = self.x_len().max(other.x_len());
        let ny = self.y_len().max(other.y_len());
        (0..nx).all(|i| (0..ny).all(|j| self.coeff(i, j) == other.coeff(i, j)))
    }
}

impl<T: Scalar> Poly2<T> {
    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        let mut p = Self::zero();
        p.set(0, 0, c);
        p
    }

    /// `c · x^i y^j`.
    pub fn monomial(c: T, i: usize, j: usize) -> Self {
        let mut p = Self::zero();
        p.set(i, j, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Scalar::is_zero))
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, c: T) {
        while self.rows.len() <= i {
            self.rows.push(Vec::new());
        }
        let row = &mut self.rows[i];
        while row.len() <= j {
            row.push(T::zero());
        }
        row[j] = c;
    }

    fn x_len(&self) -> usize {
        self.rows.len()
    }

    fn y_len(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Iterates over the nonzero terms as `(i, j, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|(i, j, _)| i + j).max()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.set(i, j, out.coeff(i, j).add(c));
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(Scalar::neg)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        let nx = self.x_len() + rhs.x_len();
        let ny = self.y_len() + rhs.y_len();
        out.rows = vec![vec![T::zero(); ny.max(1)]; nx.max(1)];
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                out.rows[i + k][j + l] = out.rows[i + k][j + l].add(&a.mul(b));
            }
        }
        out
    }

    /// Multiplication by `x^a y^b`.
    pub fn mul_mono(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            out.set(i + a, j + b, c.clone());
        }
        out
    }

    pub fn dx(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            if i > 0 {
                out.set(
                    i - 1,
                    j,
                    c.mul(&T::from_rational(&crate::arith::rat_int(i as i64))),
                );
            }
        }
        out
    }

    pub fn dy(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            if j > 0 {
                out.set(
                    i,
                    j - 1,
                    c.mul(&T::from_rational(&crate::arith::rat_int(j as i64))),
                );
            }
        }
        out
    }

    /// `p(−x, y)`.
    pub fn reflect_x(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            out.set(i, j, if i % 2 == 0 { c.clone() } else { c.neg() });
        }
        out
    }

    /// `p(x, −y)`.
    pub fn reflect_y(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            out.set(i, j, if j % 2 == 0 { c.clone() } else { c.neg() });
        }
        out
    }

    /// `(p(x,y) − p(−x,y)) / x`: twice the x-odd part shifted down in x.
    pub fn odd_shift_down_x(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            if i % 2 == 1 {
                out.set(i - 1, j, c.add(c));
            }
        }
        out
    }

    /// `(p(x,y) − p(x,−y)) / y`.
    pub fn odd_shift_down_y(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            if j % 2 == 1 {
                out.set(i, j - 1, c.add(c));
            }
        }
        out
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        let mut xp = T::one();
        for row in &self.rows {
            let mut rowacc = T::zero();
            for c in row.iter().rev() {
                rowacc = rowacc.mul(y).add(c);
            }
            acc = acc.add(&rowacc.mul(&xp));
            xp = xp.mul(x);
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly2<U> {
        let mut out = Poly2::zero();
        for (i, j, c) in self.terms() {
            out.set(i, j, f(c));
        }
        out
    }
}

impl Poly2<Rational> {
    pub fn to_f64(&self) -> Poly2<f64> {
        self.map(to_f64)
    }
}

impl Poly2<f64> {
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms().fold(0.0, |m, (_, _, c)| m.max(c.abs()))
    }

    /// First nonzero coefficient in graded-lexicographic term order, with a
    /// cutoff relative to the largest coefficient; used for sign matching
    /// between polynomials that agree up to a conventional overall phase.
    pub fn lowest_significant_coeff(&self, rel_cutoff: f64) -> Option<f64> {
        let scale = self.max_abs_coeff();
        if scale == 0.0 {
            return None;
        }
        self.terms()
            .filter(|(_, _, c)| c.abs() > rel_cutoff * scale)
            .min_by_key(|&(i, j, _)| (i + j, i))
            .map(|(_, _, c)| *c)
    }
}
