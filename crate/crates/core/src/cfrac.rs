//! Stieltjes, Jacobi and Thron continued fractions.
//!
//! ```text
//! Stieltjes  1/(1 - α1 x/(1 - α2 x/(1 - ...)))
//! Jacobi     1/(1 - a0 x - b1 x²/(1 - a1 x - b2 x²/(1 - ...)))
//! Thron      1/(1 - a0 x - b1 x /(1 - a1 x - b2 x /(1 - ...)))
//! ```
//!
//! Coefficients are polynomials in `y` given as a finite prefix followed by
//! a tail (a repeating cycle, or a polynomial in the level index). For the
//! Stieltjes kind `alpha[i]` holds `α_{i+1}`; for Jacobi and Thron
//! `alpha[i]` holds `a_i` and `beta[i]` holds `b_{i+1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::riordan::{from_bivariate, RiordanPair};
use crate::series::{BiSeries, Coefficient, Fps, Series};
use crate::ypoly::YPoly;

/// What follows the explicit prefix of a coefficient sequence.
#[derive(Clone, Debug)]
pub enum Tail {
    /// Repeats cyclically; an empty cycle means all zeros.
    Periodic(Vec<YPoly>),
    /// `c_i = p_0 + p_1 i + p_2 i^2 + ...` at absolute position `i`.
    Polynomial(Vec<YPoly>),
}

/// An infinite coefficient sequence: explicit prefix, then a [`Tail`].
#[derive(Clone, Debug)]
pub struct CoeffSeq {
    prefix: Vec<YPoly>,
    tail: Tail,
}

impl CoeffSeq {
    pub fn new(prefix: Vec<YPoly>, tail: Tail) -> Self {
        CoeffSeq { prefix, tail }
    }

    /// `prefix`, then `tail, tail, tail, ...`.
    pub fn with_tail(prefix: Vec<YPoly>, tail: YPoly) -> Self {
        CoeffSeq::new(prefix, Tail::Periodic(vec![tail]))
    }

    pub fn constant(c: YPoly) -> Self {
        CoeffSeq::with_tail(Vec::new(), c)
    }

    pub fn periodic(prefix: Vec<YPoly>, cycle: Vec<YPoly>) -> Self {
        CoeffSeq::new(prefix, Tail::Periodic(cycle))
    }

    /// Finitely many terms followed by zeros.
    pub fn finite(terms: Vec<YPoly>) -> Self {
        CoeffSeq::new(terms, Tail::Periodic(Vec::new()))
    }

    pub fn zeros() -> Self {
        CoeffSeq::finite(Vec::new())
    }

    pub fn from_ints(prefix: &[i64], tail: i64) -> Self {
        CoeffSeq::with_tail(prefix.iter().map(|&c| YPoly::int(c)).collect(), YPoly::int(tail))
    }

    pub fn prefix(&self) -> &[YPoly] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn get(&self, i: usize) -> YPoly {
        if let Some(c) = self.prefix.get(i) {
            return c.clone();
        }
        match &self.tail {
            Tail::Periodic(cycle) if cycle.is_empty() => YPoly::zero(),
            Tail::Periodic(cycle) => cycle[(i - self.prefix.len()) % cycle.len()].clone(),
            Tail::Polynomial(poly) => {
                let t = int(i as i64);
                poly.iter()
                    .rev()
                    .fold(YPoly::zero(), |acc, c| acc.scale(&t).add(c))
            }
        }
    }

    pub fn take(&self, n: usize) -> Vec<YPoly> {
        (0..n).map(|i| self.get(i)).collect()
    }

    /// Canonical form: minimal cycle, and no prefix entry that the tail
    /// would produce anyway.
    pub fn normalized(&self) -> CoeffSeq {
        let mut prefix = self.prefix.clone();
        match &self.tail {
            Tail::Periodic(cycle) => {
                let len = cycle.len();
                let period = (1..=len)
                    .find(|d| len % d == 0 && (0..len).all(|i| cycle[i] == cycle[i % d]))
                    .unwrap_or(0);
                let mut cycle = cycle[..period].to_vec();
                if cycle.iter().all(YPoly::is_zero) {
                    cycle.clear();
                }
                loop {
                    let before = match (prefix.last(), cycle.last()) {
                        (Some(p), Some(c)) => p == c,
                        (Some(p), None) => p.is_zero(),
                        _ => false,
                    };
                    if !before {
                        break;
                    }
                    prefix.pop();
                    if !cycle.is_empty() {
                        cycle.rotate_right(1);
                    }
                }
                CoeffSeq::periodic(prefix, cycle)
            }
            Tail::Polynomial(poly) => {
                let mut poly = poly.clone();
                while poly.last().is_some_and(YPoly::is_zero) {
                    poly.pop();
                }
                if poly.len() <= 1 {
                    let c = poly.pop().unwrap_or_else(YPoly::zero);
                    return CoeffSeq::with_tail(prefix, c).normalized();
                }
                let tail_only = CoeffSeq::new(Vec::new(), Tail::Polynomial(poly.clone()));
                while let Some(p) = prefix.last() {
                    if *p != tail_only.get(prefix.len() - 1) {
                        break;
                    }
                    prefix.pop();
                }
                CoeffSeq::new(prefix, Tail::Polynomial(poly))
            }
        }
    }

    /// Highest `y`-degree among the first `n` terms.
    pub fn max_y_degree(&self, n: usize) -> Option<usize> {
        (0..n).filter_map(|i| self.get(i).degree()).max()
    }
}

impl PartialEq for CoeffSeq {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        if a.prefix != b.prefix {
            return false;
        }
        match (&a.tail, &b.tail) {
            (Tail::Periodic(x), Tail::Periodic(y)) => x == y,
            (Tail::Polynomial(x), Tail::Polynomial(y)) => x == y,
            _ => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfKind {
    Stieltjes,
    Jacobi,
    Thron,
}

impl CfKind {
    pub fn name(self) -> &'static str {
        match self {
            CfKind::Stieltjes => "stieltjes",
            CfKind::Jacobi => "jacobi",
            CfKind::Thron => "thron",
        }
    }

    /// Power of `x` attached to each numerator.
    fn numerator_power(self) -> usize {
        match self {
            CfKind::Jacobi => 2,
            CfKind::Stieltjes | CfKind::Thron => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CFrac {
    kind: CfKind,
    alpha: CoeffSeq,
    beta: CoeffSeq,
}

impl CFrac {
    pub fn stieltjes(alpha: CoeffSeq) -> Self {
        CFrac {
            kind: CfKind::Stieltjes,
            alpha,
            beta: CoeffSeq::zeros(),
        }
    }

    /// `a` are the linear coefficients `a_0, a_1, ...`; `b` the numerators `b_1, b_2, ...`.
    pub fn jacobi(a: CoeffSeq, b: CoeffSeq) -> Self {
        CFrac {
            kind: CfKind::Jacobi,
            alpha: a,
            beta: b,
        }
    }

    /// `a` are the horizontal weights `a_0, a_1, ...`; `b` the numerators `b_1, b_2, ...`.
    pub fn thron(a: CoeffSeq, b: CoeffSeq) -> Self {
        CFrac {
            kind: CfKind::Thron,
            alpha: a,
            beta: b,
        }
    }

    pub fn kind(&self) -> CfKind {
        self.kind
    }

    pub fn alpha(&self) -> &CoeffSeq {
        &self.alpha
    }

    pub fn beta(&self) -> &CoeffSeq {
        &self.beta
    }

    /// Coefficient of `x` in the denominator at `level` (zero for Stieltjes).
    pub fn linear(&self, level: usize) -> YPoly {
        match self.kind {
            CfKind::Stieltjes => YPoly::zero(),
            _ => self.alpha.get(level),
        }
    }

    /// Numerator hanging below `level`: `α_{level+1}` or `b_{level+1}`.
    pub fn numerator(&self, level: usize) -> YPoly {
        match self.kind {
            CfKind::Stieltjes => self.alpha.get(level),
            _ => self.beta.get(level),
        }
    }

    /// True when all coefficients in the first `levels` levels are at most
    /// affine in `y`.
    pub fn is_affine_in_y(&self, levels: usize) -> bool {
        self.alpha.max_y_degree(levels).unwrap_or(0) <= 1
            && self.beta.max_y_degree(levels).unwrap_or(0) <= 1
    }

    /// Expansion to order `n`. Every level carries at least one factor of
    /// `x`, so a depth of `n` levels fixes all coefficients below `x^n`.
    pub fn expand(&self, n: usize) -> BiSeries {
        self.expand_with_depth(n, n)
    }

    /// Expansion of the fraction cut off after `depth` levels.
    pub fn expand_with_depth(&self, n: usize, depth: usize) -> BiSeries {
        self.evaluate(n, depth, &|p: &YPoly, ord| BiSeries::constant(p.clone(), ord))
    }

    /// Expansion with `y` replaced by the number `v` in every coefficient.
    pub fn expand_at(&self, n: usize, v: &Rational) -> Fps {
        self.evaluate(n, n, &|p: &YPoly, ord| Fps::constant(p.eval(v), ord))
    }

    /// Expansion with `y` replaced by `x` inside every coefficient before
    /// evaluating the fraction: the diagonal-sum series `G(x, x)`.
    pub fn expand_diagonal(&self, n: usize) -> Fps {
        self.evaluate(n, n, &|p: &YPoly, ord| Fps::polynomial(p.coeffs().to_vec(), ord).truncate(ord))
    }

    fn evaluate<R: Coefficient>(
        &self,
        n: usize,
        depth: usize,
        lift: &dyn Fn(&YPoly, usize) -> Series<R>,
    ) -> Series<R> {
        if n == 0 {
            return Series::zero(0);
        }
        let step = self.kind.numerator_power();
        // v holds the value of the fraction starting at level i + 1
        let mut below: Option<Series<R>> = None;
        for level in (0..depth).rev() {
            let Some(ord) = n.checked_sub(level * step).filter(|&o| o > 0) else {
                below = None;
                continue;
            };
            let horizontal = lift(&self.linear(level), ord).shift_up(1).truncate(ord);
            let mut den = Series::one(ord).sub(&horizontal);
            if let Some(next) = below.as_ref().filter(|_| ord > step) {
                let num = lift(&self.numerator(level), ord - step);
                let term = num.mul(&next.truncate(ord - step)).shift_up(step);
                den = den.sub(&term);
            }
            below = Some(den.inverse().expect("denominator has constant term 1"));
        }
        below.unwrap_or_else(|| Series::one(n))
    }

    /// Even contraction of a Stieltjes fraction: `a_0 = α_1`,
    /// `a_i = α_{2i} + α_{2i+1}`, `b_i = α_{2i-1} α_{2i}`.
    pub fn stieltjes_to_jacobi(&self) -> Result<CFrac> {
        if self.kind != CfKind::Stieltjes {
            return Err(Error::WrongKind { expected: "stieltjes" });
        }
        let Tail::Periodic(cycle) = &self.alpha.tail else {
            return Err(Error::UnsupportedTail);
        };
        let alpha = |j: usize| self.alpha.get(j - 1);
        let a_at = |i: usize| if i == 0 { alpha(1) } else { alpha(2 * i).add(&alpha(2 * i + 1)) };
        let b_at = |i: usize| alpha(2 * i - 1).mul(&alpha(2 * i));
        // from level k on, both contracted sequences see only the periodic part
        let k = self.alpha.prefix.len().div_ceil(2) + 1;
        let period = cycle.len();
        let a = CoeffSeq::periodic((0..k).map(a_at).collect(), (k..k + period).map(a_at).collect());
        let b = CoeffSeq::periodic((1..k).map(b_at).collect(), (k..k + period).map(b_at).collect());
        Ok(CFrac::jacobi(a.normalized(), b.normalized()))
    }

    /// Jacobi fraction `J(a0, u, u, ...; b1, v, v, ...)`: only level 0 differs.
    pub fn jacobi_level0(a0: YPoly, b1: YPoly, u: YPoly, v: YPoly) -> CFrac {
        CFrac::jacobi(CoeffSeq::with_tail(vec![a0], u), CoeffSeq::with_tail(vec![b1], v))
    }

    /// Thron fraction `T(a0, u, u, ...; b1, v, v, ...)`.
    pub fn thron_level0(a0: YPoly, b1: YPoly, u: YPoly, v: YPoly) -> CFrac {
        CFrac::thron(CoeffSeq::with_tail(vec![a0], u), CoeffSeq::with_tail(vec![b1], v))
    }
}

impl fmt::Display for CFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &CoeffSeq| {
            let terms: Vec<String> = s.take(4).iter().map(|p| format!("{p}")).collect();
            format!("{}, ...", terms.join(", "))
        };
        match self.kind {
            CfKind::Stieltjes => write!(f, "S({})", show(&self.alpha)),
            CfKind::Jacobi => write!(f, "J({}; {})", show(&self.alpha), show(&self.beta)),
            CfKind::Thron => write!(f, "T({}; {})", show(&self.alpha), show(&self.beta)),
        }
    }
}

fn affine(constant: &Rational, slope: &Rational) -> YPoly {
    YPoly::affine(constant.clone(), slope.clone())
}

/// The Thron fraction `T(ay+b, u, u, ...; cy+d, v, v, ...)`.
pub fn thron_level0(a: &Rational, b: &Rational, c: &Rational, d: &Rational, u: &Rational, v: &Rational) -> CFrac {
    CFrac::thron_level0(affine(b, a), affine(d, c), u.clone().into(), v.clone().into())
}

/// Jacobi fraction with the same expansion as [`thron_level0`]:
/// `J(b+d+(a+c)y, u+2v, ...; (u+v)(d+cy), v(u+v), ...)`.
pub fn thron_to_jacobi_level0(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    u: &Rational,
    v: &Rational,
) -> CFrac {
    let a0 = affine(&(b + d), &(a + c));
    let b1 = affine(d, c).scale(&(u + v));
    let tail_a = u + v * int(2);
    let tail_b = v * (u + v);
    CFrac::jacobi_level0(a0, b1, tail_a.into(), tail_b.into())
}

/// `J(y+a, c, c, ...; y+b, d, d, ...)`.
pub fn jacobi_y_level0(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> CFrac {
    let one = Rational::from_integer(1.into());
    CFrac::jacobi_level0(affine(a, &one), affine(b, &one), c.clone().into(), d.clone().into())
}

/// Expand a fraction to order `n` and read it as a Riordan array; fails with
/// [`Error::NotRiordan`] if `g/(1 - y f)` does not reproduce the expansion.
pub fn cfrac_to_riordan(cf: &CFrac, n: usize) -> Result<RiordanPair> {
    from_bivariate(&cf.expand(n))?.into_pair()
}

/// Fraction for the inverse of the array of `J(y+a, c, ...; y+b, d, ...)`:
/// `J(y-a, c-a-2, ...; a-b-y, 1+a-b-c+d, ...)`.
pub fn predicted_inverse_jfrac(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> CFrac {
    let one = int(1);
    let a0 = affine(&-a, &one);
    let b1 = affine(&(a - b), &-&one);
    let tail_a = c - a - int(2);
    let tail_b = &one + a - b - c + d;
    CFrac::jacobi_level0(a0, b1, tail_a.into(), tail_b.into())
}

/// Fraction for `((1+cx)/(1+ax+bx²), x/(1+ax+bx²))^{-1}`:
/// `J(y+a-c, a, a, ...; cy+b, b, b, ...)`.
pub fn rational_riordan_inverse_jfrac(a: &Rational, b: &Rational, c: &Rational) -> CFrac {
    let a0 = affine(&(a - c), &int(1));
    let b1 = affine(b, c);
    CFrac::jacobi_level0(a0, b1, a.clone().into(), b.clone().into())
}

/// The pair `((1+cx)/(1+ax+bx²), x/(1+ax+bx²))` at order `n`.
pub fn rational_riordan_pair(a: &Rational, b: &Rational, c: &Rational, n: usize) -> Result<RiordanPair> {
    let den = Fps::polynomial(vec![int(1), a.clone(), b.clone()], n);
    let g = Fps::polynomial(vec![int(1), c.clone()], n).div(&den)?;
    let f = Fps::x(n).div(&den)?;
    RiordanPair::new(g, f)
}

/// Involution family: `J(2a-2-y, a, a, ...; a-1-y, b, b, ...)` and the
/// Riordan pair it generates (checked to order `n`).
pub fn involution_gf(a: &Rational, b: &Rational, n: usize) -> Result<(RiordanPair, CFrac)> {
    let minus_one = int(-1);
    let a0 = affine(&(a * int(2) - int(2)), &minus_one);
    let b1 = affine(&(a - int(1)), &minus_one);
    let cf = CFrac::jacobi_level0(a0, b1, a.clone().into(), b.clone().into());
    let pair = cfrac_to_riordan(&cf, n)?;
    Ok((pair, cf))
}

impl From<Rational> for CoeffSeq {
    fn from(r: Rational) -> Self {
        CoeffSeq::constant(YPoly::constant(r))
    }
}

/// Is the sequence constant from position 0 on?
pub fn is_constant_seq(s: &CoeffSeq) -> bool {
    let n = s.normalized();
    n.prefix.is_empty() && matches!(&n.tail, Tail::Periodic(c) if c.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::Triangle;

    fn seq_ints(s: &Fps) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn catalan_from_stieltjes() {
        let cf = CFrac::stieltjes(CoeffSeq::from_ints(&[], 1));
        assert_eq!(seq_ints(&cf.expand_at(6, &int(0))), [1, 1, 2, 5, 14, 42]);
        assert_eq!(cf.expand(6), BiSeries::lift(&Fps::from_ints(&[1, 1, 2, 5, 14, 42])));
    }

    #[test]
    fn motzkin_from_jacobi() {
        let cf = CFrac::jacobi(CoeffSeq::from_ints(&[], 1), CoeffSeq::from_ints(&[], 1));
        assert_eq!(seq_ints(&cf.expand_at(6, &int(0))), [1, 1, 2, 4, 9, 21]);
    }

    #[test]
    fn thron_level_zero_rise_weight_y() {
        let cf = CFrac::thron_level0(YPoly::one(), YPoly::y(), YPoly::one(), YPoly::one());
        let t = Triangle::from_bivariate(&cf.expand(5)).unwrap();
        let expect = Triangle::from_int_rows(&[&[1], &[1, 1], &[1, 4, 1], &[1, 13, 7, 1], &[1, 44, 34, 10, 1]]);
        assert_eq!(t, expect);
    }

    #[test]
    fn deepening_does_not_change_low_coefficients() {
        let cf = CFrac::jacobi(
            CoeffSeq::with_tail(vec![YPoly::from_ints(&[2, 1])], YPoly::int(3)),
            CoeffSeq::with_tail(vec![YPoly::from_ints(&[1, 1])], YPoly::int(2)),
        );
        assert_eq!(cf.expand_with_depth(10, 10), cf.expand_with_depth(10, 15));
        assert_eq!(cf.expand(10), cf.expand_with_depth(10, 40));
    }

    #[test]
    fn contraction_examples() {
        let cat = CFrac::stieltjes(CoeffSeq::from_ints(&[], 1));
        let j = cat.stieltjes_to_jacobi().unwrap();
        assert_eq!(j.alpha(), &CoeffSeq::from_ints(&[1], 2));
        assert_eq!(j.beta(), &CoeffSeq::from_ints(&[], 1));
        assert_eq!(j.expand(12), cat.expand(12));

        let lbp = CFrac::stieltjes(CoeffSeq::periodic(
            vec![YPoly::int(1)],
            vec![YPoly::int(3), YPoly::int(2)],
        ));
        let j = lbp.stieltjes_to_jacobi().unwrap();
        assert_eq!(j.alpha(), &CoeffSeq::from_ints(&[1], 5));
        assert_eq!(j.beta(), &CoeffSeq::from_ints(&[3], 6));

        let s = CFrac::stieltjes(CoeffSeq::periodic(
            vec![YPoly::y()],
            vec![YPoly::int(2), YPoly::int(1)],
        ));
        let j = s.stieltjes_to_jacobi().unwrap();
        assert_eq!(j.alpha(), &CoeffSeq::with_tail(vec![YPoly::y()], YPoly::int(3)));
        assert_eq!(j.beta(), &CoeffSeq::with_tail(vec![YPoly::from_ints(&[0, 2])], YPoly::int(2)));
        assert_eq!(j.expand(12), s.expand(12));

        assert_eq!(j.stieltjes_to_jacobi().unwrap_err(), Error::WrongKind { expected: "stieltjes" });
    }

    #[test]
    fn thron_to_jacobi_examples() {
        let p = |v: [i64; 6]| v.map(int);
        let [a, b, c, d, u, v] = p([2, 3, -1, 4, 1, 5]);
        let j = thron_to_jacobi_level0(&a, &b, &c, &d, &u, &v);
        assert_eq!(j.linear(0), YPoly::from_ints(&[7, 1]));
        assert_eq!(j.numerator(0), YPoly::from_ints(&[24, -6]));
        assert_eq!(j.linear(1), YPoly::int(11));
        assert_eq!(j.numerator(1), YPoly::int(30));
        assert_eq!(j.expand(10), thron_level0(&a, &b, &c, &d, &u, &v).expand(10));

        let [a, b, c, d, u, v] = p([0, 1, 0, 1, 1, 1]);
        let j = thron_to_jacobi_level0(&a, &b, &c, &d, &u, &v);
        assert_eq!(j, CFrac::jacobi(CoeffSeq::from_ints(&[2], 3), CoeffSeq::from_ints(&[2], 2)));
        assert_eq!(seq_ints(&j.expand_at(5, &int(0))), [1, 2, 6, 22, 90]);

        let z = int(0);
        let j = thron_to_jacobi_level0(&z, &z, &z, &z, &z, &z);
        assert_eq!(j.expand(6), BiSeries::one(6));
    }

    #[test]
    fn proposition_example_array() {
        let [a, b, c, d] = [2, 3, 1, 4].map(int);
        let pair = cfrac_to_riordan(&jacobi_y_level0(&a, &b, &c, &d), 5).unwrap();
        let expect = Triangle::from_int_rows(&[&[1], &[2, 1], &[7, 5, 1], &[23, 23, 8, 1], &[88, 101, 48, 11, 1]]);
        assert_eq!(pair.matrix(5).unwrap(), expect);

        let pred = predicted_inverse_jfrac(&a, &b, &c, &d);
        assert_eq!(pred.linear(0), YPoly::from_ints(&[-2, 1]));
        assert_eq!(pred.numerator(0), YPoly::from_ints(&[-1, -1]));
        assert_eq!(pred.linear(1), YPoly::int(-3));
        assert_eq!(pred.numerator(1), YPoly::int(3));
        let n = 10;
        let pair = cfrac_to_riordan(&jacobi_y_level0(&a, &b, &c, &d), n).unwrap();
        assert_eq!(pred.expand(n), pair.inverse().unwrap().bivariate_gf(n).unwrap());
    }

    #[test]
    fn degenerate_level0() {
        let z = int(0);
        let pair = cfrac_to_riordan(
            &CFrac::jacobi_level0(YPoly::y(), YPoly::zero(), YPoly::zero(), YPoly::zero()),
            6,
        )
        .unwrap();
        assert_eq!(pair, RiordanPair::identity(6));
        // J(y, 0, ...; y, 0, ...) is (1, x + x^2); its inverse matches the prediction
        let n = 10;
        let pair = cfrac_to_riordan(&jacobi_y_level0(&z, &z, &z, &z), n).unwrap();
        assert_eq!(
            predicted_inverse_jfrac(&z, &z, &z, &z).expand(n),
            pair.inverse().unwrap().bivariate_gf(n).unwrap()
        );
    }

    #[test]
    fn rational_inverse_examples() {
        let n = 10;
        let z = int(0);
        let j = rational_riordan_inverse_jfrac(&z, &z, &z);
        assert_eq!(j.expand(n), RiordanPair::identity(n).bivariate_gf(n).unwrap());
        for (a, b, c) in [(1, 1, 2), (-3, 2, 0)] {
            let (a, b, c) = (int(a), int(b), int(c));
            let inv = rational_riordan_pair(&a, &b, &c, n).unwrap().inverse().unwrap();
            assert_eq!(rational_riordan_inverse_jfrac(&a, &b, &c).expand(n), inv.bivariate_gf(n).unwrap());
        }
    }

    #[test]
    fn involution_examples() {
        let (pair, _) = involution_gf(&int(1), &int(1), 6).unwrap();
        let expect = Triangle::from_int_rows(&[
            &[1],
            &[0, -1],
            &[0, -1, 1],
            &[0, -1, 2, -1],
            &[0, -2, 3, -3, 1],
            &[0, -4, 6, -6, 4, -1],
        ]);
        assert_eq!(pair.matrix(6).unwrap(), expect);

        let (pair, _) = involution_gf(&int(2), &int(2), 6).unwrap();
        let expect = Triangle::from_int_rows(&[
            &[1],
            &[2, -1],
            &[5, -5, 1],
            &[14, -20, 8, -1],
            &[43, -76, 44, -11, 1],
            &[142, -287, 210, -77, 14, -1],
        ]);
        assert_eq!(pair.matrix(6).unwrap(), expect);

        let (pair, _) = involution_gf(&int(1), &int(1), 8).unwrap();
        assert!(pair.is_involution(8).unwrap());
        assert!(pair.mul(&pair).unwrap().matrix(8).unwrap().is_identity());
    }

    #[test]
    fn involution_first_column_via_level0_form() {
        // a = 2, b = 2: first column 1, 2, 5, 14, 43
        let (pair, cf) = involution_gf(&int(2), &int(2), 5).unwrap();
        assert_eq!(seq_ints(pair.g()), [1, 2, 5, 14, 43]);
        assert_eq!(seq_ints(&cf.expand_at(5, &int(0))), [1, 2, 5, 14, 43]);
    }

    #[test]
    fn normalization() {
        let s = CoeffSeq::periodic(
            vec![YPoly::int(1), YPoly::int(2), YPoly::int(3)],
            vec![YPoly::int(2), YPoly::int(3), YPoly::int(2), YPoly::int(3)],
        );
        let n = s.normalized();
        assert_eq!(n.prefix(), &[YPoly::int(1)]);
        assert_eq!(s.take(8), n.take(8));
        assert_eq!(CoeffSeq::finite(vec![YPoly::int(0)]).normalized().prefix().len(), 0);
        let poly = CoeffSeq::new(vec![YPoly::int(1)], Tail::Polynomial(vec![YPoly::int(1), YPoly::int(2)]));
        assert_eq!(poly.take(4), [1, 3, 5, 7].map(YPoly::int).to_vec());
        assert_eq!(poly.normalized().prefix().len(), 0);
        assert!(is_constant_seq(&CoeffSeq::from_ints(&[4, 4], 4)));
    }

    #[test]
    fn diagonal_substitution() {
        // Pascal: 1/(1 - x - xy) = T(1 + y; 0); diagonal sums are Fibonacci
        let cf = CFrac::jacobi(CoeffSeq::constant(YPoly::from_ints(&[1, 1])), CoeffSeq::zeros());
        assert_eq!(seq_ints(&cf.expand_diagonal(8)), [1, 1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(cf.expand(8).substitute_y_by_x(), cf.expand_diagonal(8));
    }
}
