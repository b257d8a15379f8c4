//! Polynomial families given by three-term recurrences, their coefficient
//! arrays and their moment sequences.

use crate::cfrac::{rational_riordan_inverse_jfrac, CFrac, CoeffSeq};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::riordan::RiordanPair;
use crate::series::{Coefficient, Fps};
use crate::triangle::Triangle;
use crate::ypoly::YPoly;

/// A three-term recurrence together with its two initial polynomials.
#[derive(Clone, Debug, PartialEq)]
pub enum RecurrenceSpec {
    /// `P_n = (z - a) P_{n-1} - b P_{n-2}`, with `P_0 = 1`,
    /// `P_1 = z - a + alpha`, `P_2 = (z - a) P_1 - b + beta`.
    /// Coefficient array `((1+αx+βx²)/(1+ax+bx²), x/(1+ax+bx²))`.
    Orthogonal {
        a: Rational,
        b: Rational,
        alpha: Rational,
        beta: Rational,
    },
    /// `P_n = (z + s) P_{n-1} - t z P_{n-2}`, with `P_0 = 1`,
    /// `P_1 = z + s + alpha`, `P_2 = (z + s) P_1 - t z + beta`.
    /// Coefficient array `((1+αx+βx²)/(1-sx), x(1-tx)/(1-sx))`.
    LaurentBiorthogonal {
        s: Rational,
        t: Rational,
        alpha: Rational,
        beta: Rational,
    },
}

/// Three fractions for the moment sequence of a Laurent biorthogonal family.
#[derive(Clone, Debug, PartialEq)]
pub struct LbpFractions {
    pub thron: CFrac,
    pub stieltjes: CFrac,
    pub jacobi: CFrac,
}

impl RecurrenceSpec {
    pub fn orthogonal(a: i64, b: i64, alpha: i64, beta: i64) -> Self {
        RecurrenceSpec::Orthogonal {
            a: int(a),
            b: int(b),
            alpha: int(alpha),
            beta: int(beta),
        }
    }

    pub fn laurent_biorthogonal(s: i64, t: i64, alpha: i64, beta: i64) -> Self {
        RecurrenceSpec::LaurentBiorthogonal {
            s: int(s),
            t: int(t),
            alpha: int(alpha),
            beta: int(beta),
        }
    }

    fn numerator(&self) -> Vec<Rational> {
        match self {
            RecurrenceSpec::Orthogonal { alpha, beta, .. }
            | RecurrenceSpec::LaurentBiorthogonal { alpha, beta, .. } => vec![int(1), alpha.clone(), beta.clone()],
        }
    }

    /// Riordan pair whose matrix rows are the coefficient lists of `P_0, P_1, ...`.
    pub fn coefficient_array(&self, n: usize) -> Result<RiordanPair> {
        let num = Fps::polynomial(self.numerator(), n);
        match self {
            RecurrenceSpec::Orthogonal { a, b, .. } => {
                let den = Fps::polynomial(vec![int(1), a.clone(), b.clone()], n);
                RiordanPair::new(num.div(&den)?, Fps::x(n).div(&den)?)
            }
            RecurrenceSpec::LaurentBiorthogonal { s, t, .. } => {
                let den = Fps::polynomial(vec![int(1), -s], n);
                let f = Fps::polynomial(vec![int(0), int(1), -t], n).div(&den)?;
                RiordanPair::new(num.div(&den)?, f)
            }
        }
    }

    /// Coefficients of `P_0, ..., P_{n-1}` generated by the recurrence itself.
    pub fn recurrence_triangle(&self, n: usize) -> Triangle {
        let z = YPoly::y();
        // P_n = lin * P_{n-1} + quad * P_{n-2}
        let (lin, quad) = match self {
            RecurrenceSpec::Orthogonal { a, b, .. } => (z.sub(&YPoly::constant(a.clone())), YPoly::constant(-b)),
            RecurrenceSpec::LaurentBiorthogonal { s, t, .. } => (z.add(&YPoly::constant(s.clone())), z.scale(&-t)),
        };
        let num = self.numerator();
        let mut polys: Vec<YPoly> = Vec::with_capacity(n);
        for m in 0..n {
            let p = match m {
                0 => YPoly::one(),
                1 => lin.add(&YPoly::constant(num[1].clone())),
                _ => {
                    let mut p = lin.mul(&polys[m - 1]).add(&quad.mul(&polys[m - 2]));
                    if m == 2 {
                        p = p.add(&YPoly::constant(num[2].clone()));
                    }
                    p
                }
            };
            polys.push(p);
        }
        Triangle::from_rows(polys.iter().map(|p| p.coeffs().to_vec()).collect())
            .expect("P_n has degree n")
    }

    /// First `n` moments: the first column of the inverse coefficient array.
    pub fn moments(&self, n: usize) -> Result<Vec<Rational>> {
        let inv = self.coefficient_array(n)?.matrix(n)?.inverse()?;
        Ok(inv.column(0).into_coeffs())
    }

    /// For orthogonal families with `beta = 0`: the Jacobi fraction whose
    /// expansion is the bivariate generating function of the inverse array,
    /// `J(y+a-α, a, ...; αy+b, b, ...)`. At `y = 0` it gives the moments.
    pub fn inverse_jacobi(&self) -> Result<CFrac> {
        match self {
            RecurrenceSpec::Orthogonal { a, b, alpha, beta } if beta.is_zero() => {
                Ok(rational_riordan_inverse_jfrac(a, b, alpha))
            }
            _ => Err(Error::UnsupportedParameters(
                "inverse Jacobi fraction needs an orthogonal family with beta = 0".into(),
            )),
        }
    }

    /// Moment fractions of a Laurent biorthogonal family with `beta = 0`.
    /// With `c = -(alpha + s)`:
    /// `T(0, s, s, ...; c, t-s, t-s, ...)`, `S(c, t, t-s, t, t-s, ...)` and
    /// its contraction `J(c, 2t-s, ...; ct, t(t-s), ...)`.
    pub fn lbp_moment_cfs(&self) -> Result<LbpFractions> {
        let RecurrenceSpec::LaurentBiorthogonal { s, t, alpha, beta } = self else {
            return Err(Error::UnsupportedParameters("not a Laurent biorthogonal family".into()));
        };
        if !beta.is_zero() {
            return Err(Error::UnsupportedParameters("moment fractions need beta = 0".into()));
        }
        let c = -(alpha + s);
        let k = |r: Rational| YPoly::constant(r);
        let thron = CFrac::thron_level0(k(int(0)), k(c.clone()), k(s.clone()), k(t - s));
        let stieltjes = CFrac::stieltjes(CoeffSeq::periodic(vec![k(c.clone())], vec![k(t.clone()), k(t - s)]).normalized());
        let jacobi = CFrac::jacobi_level0(
            k(c.clone()),
            k(&c * t),
            k(t * int(2) - s),
            k(t * (t - s)),
        );
        Ok(LbpFractions {
            thron,
            stieltjes,
            jacobi,
        })
    }
}
