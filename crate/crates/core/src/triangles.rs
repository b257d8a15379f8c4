//! Named number triangles, triangle algebra and a few sequence transforms.
//!
//! The Narayana family is built from closed forms and matrix products; the
//! continued fractions in [`narayana_cf_suite`] are only ever compared
//! against those constructions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::cfrac::{CFrac, CoeffSeq};
use crate::error::{Error, Result};
use crate::rational::{big, binomial, catalan, int, Rational};
use crate::riordan::RiordanPair;
use crate::series::Fps;
use crate::triangle::Triangle;
use crate::ypoly::YPoly;

/// Largest order [`named_triangle`] will build.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleName {
    /// `C(n, k)`.
    Binomial,
    /// `N(n, k) = C(n, k) C(n+1, k) / (k + 1)`.
    Narayana,
    /// Narayana moved one step down and right: `N(n-1, k-1)`.
    NarayanaShifted,
    /// `N B`.
    NbProduct,
    /// `B^{-1} N B`.
    NbConjugate,
    /// `(1/(1+x), x(1-x)/(1+x))`.
    DelannoySigned,
    /// `((1-2x)/(1-x), x(1-2x)/(1-x))^{-1}`: Schröder paths by peaks at height 1.
    SchroederPeaks,
    /// `N B` moved one row down: little Schröder paths.
    LittleQSchroeder,
}

impl TriangleName {
    pub const ALL: [TriangleName; 8] = [
        TriangleName::Binomial,
        TriangleName::Narayana,
        TriangleName::NarayanaShifted,
        TriangleName::NbProduct,
        TriangleName::NbConjugate,
        TriangleName::DelannoySigned,
        TriangleName::SchroederPeaks,
        TriangleName::LittleQSchroeder,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TriangleName::Binomial => "binomial",
            TriangleName::Narayana => "narayana",
            TriangleName::NarayanaShifted => "narayana_shifted",
            TriangleName::NbProduct => "nb_product",
            TriangleName::NbConjugate => "nb_conjugate",
            TriangleName::DelannoySigned => "delannoy_signed",
            TriangleName::SchroederPeaks => "schroeder_peaks",
            TriangleName::LittleQSchroeder => "little_q_schroeder",
        }
    }
}

impl fmt::Display for TriangleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TriangleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TriangleName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn narayana_entry(n: usize, k: usize) -> BigInt {
    if n == 0 && k == 0 {
        return BigInt::from(1);
    }
    binomial(n, k) * binomial(n + 1, k) / BigInt::from(k + 1)
}

fn shift_down(t: &Triangle, order: usize, col_shift: usize) -> Triangle {
    Triangle::from_fn(order, |n, k| {
        if n == 0 {
            if k == 0 { int(1) } else { int(0) }
        } else if k >= col_shift {
            t.get(n - 1, k - col_shift)
        } else {
            int(0)
        }
    })
}

/// Build a named triangle of order `n`.
pub fn named_triangle(name: TriangleName, n: usize) -> Result<Triangle> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, max: MAX_ORDER });
    }
    let binom = || Triangle::from_fn(n, |i, j| big(binomial(i, j)));
    let narayana = || Triangle::from_fn(n, |i, j| big(narayana_entry(i, j)));
    Ok(match name {
        TriangleName::Binomial => binom(),
        TriangleName::Narayana => narayana(),
        TriangleName::NarayanaShifted => shift_down(&narayana(), n, 1),
        TriangleName::NbProduct => narayana().mul(&binom()),
        TriangleName::NbConjugate => binom().inverse()?.mul(&narayana().mul(&binom())),
        TriangleName::DelannoySigned => {
            let den = Fps::polynomial_ints(&[1, 1], n.max(2));
            let g = den.inverse()?;
            let f = Fps::polynomial_ints(&[0, 1, -1], n.max(2)).div(&den)?;
            RiordanPair::new(g, f)?.matrix(n)?
        }
        TriangleName::SchroederPeaks => {
            let den = Fps::polynomial_ints(&[1, -1], n.max(2));
            let g = Fps::polynomial_ints(&[1, -2], n.max(2)).div(&den)?;
            let f = Fps::polynomial_ints(&[0, 1, -2], n.max(2)).div(&den)?;
            RiordanPair::new(g, f)?.inverse()?.matrix(n)?
        }
        TriangleName::LittleQSchroeder => {
            let nb = narayana().mul(&binom());
            shift_down(&nb, n, 0)
        }
    })
}

/// Product of two triangles of equal order.
pub fn triangle_mul(a: &Triangle, b: &Triangle) -> Result<Triangle> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch(format!("orders {} and {}", a.order(), b.order())));
    }
    Ok(a.mul(b))
}

pub fn triangle_inv(t: &Triangle) -> Result<Triangle> {
    t.inverse()
}

/// The continued fractions attached to the Narayana family.
#[derive(Clone, Debug, PartialEq)]
pub struct NarayanaSuite {
    /// `J(y+1, y+1, ...; y, y, ...)`: Narayana.
    pub jacobi: CFrac,
    /// `T(1, 1-y, 1-y, ...; y, y, ...)`: Narayana.
    pub thron: CFrac,
    /// The same fraction with tail horizontals `-(y+1)` instead of `1-y`.
    pub thron_variant: CFrac,
    /// `T(0, 1-y, 1-y, ...; y, y, ...)`: shifted Narayana.
    pub shifted_thron: CFrac,
    /// `J(y+2, ...; y+1, ...)`: `N B`.
    pub nb_jacobi: CFrac,
    /// `T(1, -y, -y, ...; y+1, y+1, ...)`: `N B`.
    pub nb_thron: CFrac,
    /// `S(1, y+1, 1, y+1, ...)`, `T(0, y, y, ...; 1, 1, ...)`,
    /// `J(1, y+2, y+2, ...; y+1, y+1, ...)`: little Schröder paths.
    pub little_q: [CFrac; 3],
    /// `J(y+1, ...; y+1, ...)`: `B^{-1} N B`.
    pub conjugate_jacobi: CFrac,
    /// `T(-1, -1, ...; 2, 1, 2, 1, ...)`: expands to `1 + x D(x)` where `D`
    /// is the diagonal-sum series of `B^{-1} N B`.
    pub diagonal_thron: CFrac,
}

pub fn narayana_cf_suite() -> NarayanaSuite {
    let p = |c: &[i64]| YPoly::from_ints(c);
    let tail = |c: &[i64]| CoeffSeq::constant(p(c));
    NarayanaSuite {
        jacobi: CFrac::jacobi(tail(&[1, 1]), tail(&[0, 1])),
        thron: CFrac::thron_level0(p(&[1]), p(&[0, 1]), p(&[1, -1]), p(&[0, 1])),
        thron_variant: CFrac::thron_level0(p(&[1]), p(&[0, 1]), p(&[-1, -1]), p(&[0, 1])),
        shifted_thron: CFrac::thron_level0(p(&[0]), p(&[0, 1]), p(&[1, -1]), p(&[0, 1])),
        nb_jacobi: CFrac::jacobi(tail(&[2, 1]), tail(&[1, 1])),
        nb_thron: CFrac::thron_level0(p(&[1]), p(&[1, 1]), p(&[0, -1]), p(&[1, 1])),
        little_q: [
            CFrac::stieltjes(CoeffSeq::periodic(Vec::new(), vec![p(&[1]), p(&[1, 1])])),
            CFrac::thron_level0(p(&[0]), p(&[1]), p(&[0, 1]), p(&[1])),
            CFrac::jacobi_level0(p(&[1]), p(&[1, 1]), p(&[2, 1]), p(&[1, 1])),
        ],
        conjugate_jacobi: CFrac::jacobi(tail(&[1, 1]), tail(&[1, 1])),
        diagonal_thron: CFrac::thron(
            CoeffSeq::constant(p(&[-1])),
            CoeffSeq::periodic(Vec::new(), vec![p(&[2]), p(&[1])]),
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `b_n = sum_k C(n,k) a_k`.
    Forward,
    /// `b_n = sum_k C(n,k) (-1)^{n-k} a_k`.
    Inverse,
}

pub fn binomial_transform(seq: &[Rational], direction: Direction) -> Vec<Rational> {
    (0..seq.len())
        .map(|n| {
            (0..=n).fold(int(0), |acc, k| {
                let term = big(binomial(n, k)) * &seq[k];
                if direction == Direction::Inverse && (n - k) % 2 == 1 {
                    acc - term
                } else {
                    acc + term
                }
            })
        })
        .collect()
}

/// Large Schröder numbers `S_n = sum_k C(n+k, 2k) C_k`.
pub fn large_schroeder(n: usize) -> BigInt {
    (0..=n).map(|k| binomial(n + k, 2 * k) * catalan(k)).sum()
}

/// `sum_{k=0}^n C(n+k, 2k) (-1)^{n-k} S_k` for `n < len`. From `n = 1` on
/// this is the diagonal-sum sequence of `B^{-1} N B` delayed by one place:
/// `1, 1, 1, 3, 7, 19, 53, ...`.
pub fn schroeder_alternating_transform(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|n| {
            let total: BigInt = (0..=n)
                .map(|k| {
                    let t = binomial(n + k, 2 * k) * large_schroeder(k);
                    if (n - k) % 2 == 1 { -t } else { t }
                })
                .sum();
            big(total)
        })
        .collect()
}
