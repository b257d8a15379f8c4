//! Dense polynomials in the marker variable `y`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Polynomial `c_0 + c_1 y + c_2 y^2 + ...` with trailing zeros trimmed.
///
/// The zero polynomial has no stored coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    coeffs: Vec<Rational>,
}

impl YPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = YPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        YPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        YPoly::new(vec![c])
    }

    pub fn int(c: i64) -> Self {
        YPoly::constant(int(c))
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        YPoly::from_ints(&[0, 1])
    }

    /// `a + b*y`.
    pub fn affine(a: Rational, b: Rational) -> Self {
        YPoly::new(vec![a, b])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `y^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    pub fn add(&self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        YPoly::new(out)
    }

    pub fn neg(&self) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> YPoly {
        YPoly::new(self.coeffs.iter().map(|c| c * r).collect())
    }
}

impl From<Rational> for YPoly {
    fn from(r: Rational) -> Self {
        YPoly::constant(r)
    }
}

impl From<i64> for YPoly {
    fn from(n: i64) -> Self {
        YPoly::int(n)
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

/// Ascending powers, e.g. `3 - 2*y + y^2`. Re-parses to the same value with
/// the expression grammar used by the command line.
impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn trims_trailing_zeros() {
        let p = YPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(YPoly::from_ints(&[0, 0]), YPoly::zero());
        assert_eq!(YPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = YPoly::from_ints(&[1, 1]);
        let q = YPoly::from_ints(&[-1, 1]);
        assert_eq!(p.mul(&q), YPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(p.add(&q), YPoly::from_ints(&[0, 2]));
        assert_eq!(p.sub(&p), YPoly::zero());
        assert_eq!(p.mul(&q).eval(&int(3)), int(8));
        assert_eq!(p.scale(&frac(1, 2)).coeff(1), frac(1, 2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(YPoly::from_ints(&[3, -2, 1]).to_string(), "3 - 2*y + y^2");
        assert_eq!(YPoly::from_ints(&[0, -1]).to_string(), "-y");
        assert_eq!(YPoly::zero().to_string(), "0");
        assert_eq!(YPoly::new(vec![frac(-1, 2), frac(3, 4)]).to_string(), "-1/2 + 3/4*y");
    }
}
