//! Ordinary Riordan arrays.
//!
//! A pair `(g, f)` with `g(0) != 0`, `f(0) = 0`, `f'(0) != 0` stands for the
//! lower-triangular matrix with entries `[x^n] g f^k`. Pairs multiply by
//! `(g, f)(u, v) = (g u(f), v(f))`, matching the matrix product, and the
//! group identity is `(1, x)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::series::{BiSeries, Coefficient, Fps, Series};
use crate::triangle::Triangle;
use crate::ypoly::YPoly;

#[derive(Clone, PartialEq)]
pub struct RiordanPair<R = Rational> {
    g: Series<R>,
    f: Series<R>,
}

impl<R: fmt::Display> fmt::Debug for RiordanPair<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RiordanPair").field("g", &self.g).field("f", &self.f).finish()
    }
}

impl<R: Coefficient> RiordanPair<R> {
    /// Validates `g(0)` and `f(0)`, `f_1` as units / zero as appropriate.
    pub fn new(g: Series<R>, f: Series<R>) -> Result<Self> {
        if g.order() == 0 || g.coeff(0).unit_inverse().is_none() {
            return Err(Error::InvalidG);
        }
        if f.order() < 2 || !f.coeff(0).is_zero() || f.coeff(1).unit_inverse().is_none() {
            return Err(Error::InvalidF);
        }
        Ok(RiordanPair { g, f })
    }

    pub fn identity(order: usize) -> Self {
        RiordanPair {
            g: Series::one(order),
            f: Series::x(order),
        }
    }

    pub fn g(&self) -> &Series<R> {
        &self.g
    }

    pub fn f(&self) -> &Series<R> {
        &self.f
    }

    /// Largest matrix size supported by the stored precision.
    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// Entries `[x^n] g f^k` for `0 <= k <= n < N`.
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
        Ok(Triangle::from_fn(n, |i, k| columns[k].coeff(i).clone()))
    }

    /// Riordan product `(g, f) * (u, v) = (g u(f), v(f))`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let g = self.g.mul(&rhs.g.compose(&self.f)?);
        let f = rhs.f.compose(&self.f)?;
        RiordanPair::new(g, f)
    }

    /// `(g, f)^{-1} = (1 / g(fbar), fbar)` with `fbar` the compositional inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let fbar = self.f.truncate(n).reversion()?;
        let g = self.g.compose(&fbar)?.inverse()?;
        RiordanPair::new(g, fbar)
    }

    /// Fundamental theorem action: `(g, f) . h = g * h(f)`.
    pub fn apply(&self, h: &Series<R>) -> Result<Series<R>> {
        Ok(self.g.mul(&h.compose(&self.f)?))
    }

    /// True iff the `n x n` matrix squares to the identity.
    pub fn is_involution(&self, n: usize) -> Result<bool> {
        let m = self.matrix(n)?;
        Ok(m.mul(&m).is_identity())
    }

    /// Bell subgroup membership: `f = x g` within the common order.
    pub fn is_bell(&self) -> bool {
        let n = self.order();
        let xg = self.g.shift_up(1).truncate(n);
        xg == self.f.truncate(n)
    }
}

impl RiordanPair<Rational> {
    /// `G(x, y) = g(x) / (1 - y f(x))` to order `n`.
    pub fn bivariate_gf(&self, n: usize) -> Result<BiSeries> {
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                needed: n,
                available: self.order(),
            });
        }
        let g = BiSeries::lift(&self.g.truncate(n));
        let yf = BiSeries::lift(&self.f.truncate(n)).scale_by(&YPoly::y());
        g.div(&BiSeries::one(n).sub(&yf))
    }

    /// Pascal's triangle `(1/(1-x), x/(1-x))`.
    pub fn pascal(order: usize) -> Self {
        let geo = Fps::polynomial_ints(&[1, -1], order)
            .inverse()
            .expect("1 - x is a unit");
        let f = geo.shift_up(1).truncate(order);
        RiordanPair::new(geo, f).expect("Pascal pair is valid")
    }
}

/// Outcome of reading a candidate Riordan pair off a bivariate series.
#[derive(Clone, Debug, PartialEq)]
pub struct Reconstruction {
    /// `G(x, 0)`.
    pub g: Fps,
    /// `1 - G(x, 0) / G(x, 1)`; zero when `G(0, 1)` vanishes.
    pub f: Fps,
    /// `g / (1 - y f)` reproduces `G` and `(g, f)` is a valid pair.
    pub is_riordan: bool,
    /// Order up to which the comparison was carried out.
    pub verified_order: usize,
}

impl Reconstruction {
    pub fn into_pair(self) -> Result<RiordanPair> {
        if !self.is_riordan {
            return Err(Error::NotRiordan(self.verified_order));
        }
        RiordanPair::new(self.g, self.f)
    }
}

/// Recover `(g, f)` from `G(x, y)` via `g = G(x, 0)` and
/// `f = 1 - G(x, 0)/G(x, 1)`, then check that `g/(1 - y f)` gives back `G`.
///
/// The first-column series is `G(x, 0)`: setting `y = 0` in `g/(1 - y f)`
/// leaves `g`. (The formula `g = G(x, 1)` would give the row sums.)
pub fn from_bivariate(big_g: &BiSeries) -> Result<Reconstruction> {
    let n = big_g.order();
    if n == 0 || big_g.coeff(0).coeff(0) == int(0) {
        return Err(Error::ZeroConstant);
    }
    let g = big_g.substitute_y(&int(0));
    let at_one = big_g.substitute_y(&int(1));
    let Ok(ratio) = g.div(&at_one) else {
        return Ok(Reconstruction {
            g,
            f: Fps::zero(n),
            is_riordan: false,
            verified_order: n,
        });
    };
    let f = Fps::one(n).sub(&ratio);
    let is_riordan = match RiordanPair::new(g.clone(), f.clone()) {
        Ok(pair) => pair.bivariate_gf(n)? == *big_g,
        Err(_) => false,
    };
    Ok(Reconstruction {
        g,
        f,
        is_riordan,
        verified_order: n,
    })
}

/// Row sums, diagonal sums and alternating row sums.
pub fn triangle_sums<R: Coefficient>(t: &Triangle<R>) -> (Vec<R>, Vec<R>, Vec<R>) {
    (t.row_sums(), t.diagonal_sums(), t.alternating_sums())
}
