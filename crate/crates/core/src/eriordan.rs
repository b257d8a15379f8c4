//! Exponential Riordan arrays.
//!
//! `[g, f]` has entries `n!/k! [x^n] g f^k` and bivariate exponential
//! generating function `g(x) exp(y f(x))`.

use std::fmt;

use crate::cfrac::{CFrac, CoeffSeq, Tail};
use crate::error::{Error, Result};
use crate::rational::{big, factorial, int, Rational};
use crate::series::{BiSeries, Coefficient, Series};
use crate::triangle::Triangle;
use crate::ypoly::YPoly;

/// `exp(h)` for `h(0) = 0`, from `n E_n = sum_{k=1}^n k h_k E_{n-k}`.
pub fn exp_series<R: Coefficient>(h: &Series<R>) -> Result<Series<R>> {
    let n = h.order();
    if n == 0 {
        return Ok(Series::zero(0));
    }
    if !h.coeff(0).is_zero() {
        return Err(Error::NonzeroExpArgument);
    }
    let mut e: Vec<R> = Vec::with_capacity(n);
    e.push(R::one());
    for m in 1..n {
        let sum = (1..=m).fold(R::zero(), |acc, k| {
            acc.plus(&h.coeff(k).scale(&int(k as i64)).times(&e[m - k]))
        });
        e.push(sum.scale(&Rational::new(1.into(), (m as i64).into())));
    }
    Ok(Series::from_coeffs(e))
}

#[derive(Clone, PartialEq)]
pub struct ExpRiordanPair<R = Rational> {
    g: Series<R>,
    f: Series<R>,
}

impl<R: fmt::Display> fmt::Debug for ExpRiordanPair<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExpRiordanPair").field("g", &self.g).field("f", &self.f).finish()
    }
}

impl<R: Coefficient> ExpRiordanPair<R> {
    /// Same admissibility conditions as an ordinary pair.
    pub fn new(g: Series<R>, f: Series<R>) -> Result<Self> {
        if g.order() == 0 || g.coeff(0).unit_inverse().is_none() {
            return Err(Error::InvalidG);
        }
        if f.order() < 2 || !f.coeff(0).is_zero() || f.coeff(1).unit_inverse().is_none() {
            return Err(Error::InvalidF);
        }
        Ok(ExpRiordanPair { g, f })
    }

    pub fn g(&self) -> &Series<R> {
        &self.g
    }

    pub fn f(&self) -> &Series<R> {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// Entries `n!/k! [x^n] g f^k`, `0 <= k <= n < N`.
    pub fn matrix(&self, n: usize) -> Result<Triangle<R>> {
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                needed: n,
                available: self.order(),
            });
        }
        let f = self.f.truncate(n);
        let mut column = self.g.truncate(n);
        let mut columns = Vec::with_capacity(n);
        for _ in 0..n {
            columns.push(column.clone());
            column = column.mul(&f);
        }
        Ok(Triangle::from_fn(n, |i, k| {
            let ratio = big(factorial(i) / factorial(k));
            columns[k].coeff(i).scale(&ratio)
        }))
    }

    /// `[g, f] [u, v] = [g u(f), v(f)]`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let g = self.g.mul(&rhs.g.compose(&self.f)?);
        let f = rhs.f.compose(&self.f)?;
        ExpRiordanPair::new(g, f)
    }

    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.truncate(self.order()).reversion()?;
        let g = self.g.compose(&fbar)?.inverse()?;
        ExpRiordanPair::new(g, fbar)
    }
}

impl ExpRiordanPair<Rational> {
    /// `g(x) exp(y f(x))` to order `n`.
    pub fn bivariate_egf(&self, n: usize) -> Result<BiSeries> {
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                needed: n,
                available: self.order(),
            });
        }
        let g = BiSeries::lift(&self.g.truncate(n));
        let yf = BiSeries::lift(&self.f.truncate(n)).scale_by(&YPoly::y());
        Ok(g.mul(&exp_series(&yf)?))
    }
}

/// Triangle with entries `n! [x^n][y^k] G(x, y)`.
pub fn triangle_from_egf(big_g: &BiSeries) -> Result<Triangle> {
    Triangle::from_rows(
        big_g
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, p)| p.scale(&big(factorial(n))).coeffs().to_vec())
            .collect(),
    )
}

/// Multipliers `m_1, m_2, ...` scaling the numerators of a [`MultiplierFamily`].
#[derive(Clone, Debug, PartialEq)]
pub enum Multipliers {
    /// `m_n = n^2`.
    Squares,
    /// `m_n = n(n+1)/2`.
    Triangulars,
    /// `m_n = n`.
    Naturals,
    /// Finitely many values, zero afterwards.
    Explicit(Vec<Rational>),
}

impl Multipliers {
    pub fn get(&self, n: usize) -> Rational {
        let n_r = int(n as i64);
        match self {
            Multipliers::Squares => &n_r * &n_r,
            Multipliers::Triangulars => &n_r * (&n_r + int(1)) / int(2),
            Multipliers::Naturals => n_r,
            Multipliers::Explicit(v) => n.checked_sub(1).and_then(|i| v.get(i)).cloned().unwrap_or_else(|| int(0)),
        }
    }

    /// `m_{i+1}` as a polynomial in the level index `i`.
    fn as_polynomial(&self) -> Option<Vec<Rational>> {
        match self {
            Multipliers::Squares => Some(vec![int(1), int(2), int(1)]),
            Multipliers::Triangulars => Some(vec![int(1), Rational::new(3.into(), 2.into()), Rational::new(1.into(), 2.into())]),
            Multipliers::Naturals => Some(vec![int(1), int(1)]),
            Multipliers::Explicit(_) => None,
        }
    }
}

/// Jacobi fractions `J(a_0, a_0 + s, a_0 + 2s, ...; c m_1, c m_2, ...)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierFamily {
    pub a0: YPoly,
    pub a_step: Rational,
    pub b_base: Rational,
    pub mults: Multipliers,
}

impl MultiplierFamily {
    pub fn multiplier_jacobi(&self) -> CFrac {
        let a = CoeffSeq::new(
            Vec::new(),
            Tail::Polynomial(vec![self.a0.clone(), YPoly::constant(self.a_step.clone())]),
        );
        let b = match self.mults.as_polynomial() {
            Some(p) => CoeffSeq::new(
                Vec::new(),
                Tail::Polynomial(p.iter().map(|c| YPoly::constant(c * &self.b_base)).collect()),
            ),
            None => {
                let Multipliers::Explicit(v) = &self.mults else { unreachable!() };
                CoeffSeq::finite(v.iter().map(|c| YPoly::constant(c * &self.b_base)).collect())
            }
        };
        CFrac::jacobi(a, b)
    }
}
