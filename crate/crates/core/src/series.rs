//! Truncated formal power series in `x`.
//!
//! A [`Series`] stores exactly `order` coefficients; the coefficient of `x^n`
//! is trusted for `n < order` and unknown beyond. Every operation states the
//! order of its output, and no operation claims more precision than its
//! inputs support.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::ypoly::YPoly;

/// Coefficient ring for [`Series`]: the rationals, or polynomials in `y`.
///
/// Units are restricted to nonzero rational constants, so series division
/// only ever divides by field elements.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// The value as a rational constant, if it is one.
    fn as_rational(&self) -> Option<Rational>;

    fn unit_inverse(&self) -> Option<Self> {
        self.as_rational()
            .filter(|r| !Zero::is_zero(r))
            .map(|r| Self::from_rational(r.recip()))
    }

    fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| One::is_one(&r))
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Coefficient for YPoly {
    fn zero() -> Self {
        YPoly::zero()
    }
    fn one() -> Self {
        YPoly::one()
    }
    fn from_rational(r: Rational) -> Self {
        YPoly::constant(r)
    }
    fn is_zero(&self) -> bool {
        YPoly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scale(&self, r: &Rational) -> Self {
        YPoly::scale(self, r)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.as_constant()
    }
}

/// Truncated power series `c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N)`.
#[derive(Clone, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

/// Series with rational coefficients.
pub type Fps = Series<Rational>;
/// Series whose coefficients are polynomials in `y`, i.e. a bivariate
/// generating function `G(x, y)` truncated in `x`.
pub type BiSeries = Series<YPoly>;

impl<R: Coefficient> Series<R> {
    /// Takes the coefficients as exact; the order is their count.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        Series { coeffs }
    }

    /// A polynomial known exactly, viewed at the given order.
    pub fn polynomial(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order],
        }
    }

    pub fn constant(c: R, order: usize) -> Self {
        Series::polynomial(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::monomial(R::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^n`. Panics if `n` is at or past the order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    /// Coefficient of `x^n`, zero when `n` is beyond the stored order. Only
    /// for callers that know the series is a polynomial.
    pub fn coeff_or_zero(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the order of a series");
        Series {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient within the known order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|a| a.times(c))
    }

    /// Multiply by `x^k`; the known order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divide by `x^k`; the first `k` coefficients must vanish. Order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n).map(|i| self.coeffs[i].plus(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n).map(|i| self.coeffs[i].minus(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negated())
    }

    /// Cauchy product truncated to `min(order(A), order(B))`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Series::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `1/A`, same order as `A`. The constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        let c0 = self.coeffs[0].unit_inverse().ok_or(Error::DivisionByNonUnit)?;
        let minus_c0 = c0.negated();
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(c0);
        for m in 1..n {
            let mut acc = R::zero();
            for k in 1..=m {
                let b = &self.coeffs[k];
                if !b.is_zero() {
                    acc = acc.plus(&b.times(&out[m - k]));
                }
            }
            out.push(acc.times(&minus_c0));
        }
        Ok(Series { coeffs: out })
    }

    /// `A/B` at order `min(order(A), order(B))`; `B(0)` must be a unit.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// `A(B(x))`, order `min(order(A), order(B))`. `B(0)` must vanish.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.order() > 0 && !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantInner);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(&inner);
            if n > 0 {
                acc.coeffs[0] = acc.coeffs[0].plus(c);
            }
        }
        Ok(acc)
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.scale(&int(n as i64)))
                .collect(),
        }
    }

    /// Compositional inverse: `f(rev(x)) = x + O(x^N)`, order preserved.
    ///
    /// Newton iteration `g <- g - (f(g) - x) / f'(g)`; each step doubles the
    /// number of correct coefficients, so the loop ends after about `log2 N`
    /// rounds when the residual vanishes.
    pub fn reversion(&self) -> Result<Self> {
        let n = self.order();
        if n < 2 || !self.coeffs[0].is_zero() {
            return Err(Error::NotReversible);
        }
        let lead_inv = self.coeffs[1].unit_inverse().ok_or(Error::NotReversible)?;
        let x = Series::x(n);
        let fprime = self.derivative();
        let mut g = Series::monomial(lead_inv, 1, n);
        for _ in 0..n {
            let residual = self.compose(&g)?.sub(&x);
            let Some(k) = residual.valuation() else {
                return Ok(g);
            };
            // residual = x^k * r, so f'(g) is only needed to order n - k
            let denom = fprime.compose(&g.truncate(n - k))?;
            let step = residual.shift_down(k)?.div(&denom)?.shift_up(k);
            g = g.sub(&step.truncate(n));
        }
        unreachable!("Newton iteration for series reversion did not converge")
    }

    /// Square root with constant term 1. Needs `A(0) = 1` exactly.
    pub fn sqrt(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm);
        }
        let half = Rational::new(1.into(), 2.into());
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(R::one());
        for m in 1..n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..m {
                acc = acc.minus(&out[k].times(&out[m - k]));
            }
            out.push(acc.scale(&half));
        }
        Ok(Series { coeffs: out })
    }
}

impl Series<YPoly> {
    /// Lift a rational series into `y`-polynomial coefficients.
    pub fn lift(s: &Fps) -> Self {
        s.map(|c| YPoly::constant(c.clone()))
    }

    /// `G(x, v)`: evaluate every coefficient at `y = v`. Order preserved.
    pub fn substitute_y(&self, v: &Rational) -> Fps {
        self.map(|p| p.eval(v))
    }

    /// `G(x, x)`. Coefficient `x^m` collects `[x^n][y^k]` over `n + k = m`;
    /// order preserved since `k >= 0`.
    pub fn substitute_y_by_x(&self) -> Fps {
        let n = self.order();
        let mut out = vec![int(0); n];
        for (i, p) in self.coeffs.iter().enumerate() {
            for (k, c) in p.coeffs().iter().enumerate() {
                if i + k < n {
                    out[i + k] += c;
                }
            }
        }
        Series::from_coeffs(out)
    }

    /// `[x^n][y^k] G`.
    pub fn entry(&self, n: usize, k: usize) -> Rational {
        self.coeffs[n].coeff(k)
    }
}

impl Fps {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn polynomial_ints(coeffs: &[i64], order: usize) -> Self {
        Series::polynomial(coeffs.iter().map(|&c| int(c)).collect(), order)
    }
}

impl<R: fmt::Display> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.coeffs.len())
    }
}

impl<R: Coefficient> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        Series::add(self, rhs)
    }
}

impl<R: Coefficient> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        Series::sub(self, rhs)
    }
}

impl<R: Coefficient> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        Series::mul(self, rhs)
    }
}

impl<R: Coefficient> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::neg(self)
    }
}
