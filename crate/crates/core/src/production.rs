//! Production (Stieltjes) matrices.
//!
//! For a lower-triangular `T` with invertible diagonal, `P = T^{-1} T̄` where
//! `T̄` is `T` with its first row removed. A finite section of `T` of order
//! `N` determines the leading `(N-1) x (N-1)` block of `P` exactly.

use std::fmt;

use crate::cfrac::{CFrac, CoeffSeq};
use crate::eriordan::ExpRiordanPair;
use crate::error::{Error, Result};
use crate::rational::{big, factorial, Rational};
use crate::series::{Coefficient, Series};
use crate::triangle::Triangle;
use crate::ypoly::YPoly;

/// Square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ProductionMatrix<R = Rational> {
    entries: Vec<Vec<R>>,
}

impl<R: Coefficient> ProductionMatrix<R> {
    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> R) -> Self {
        ProductionMatrix {
            entries: (0..size).map(|i| (0..size).map(|j| entry(i, j)).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.entries
    }

    /// Leading `size x size` block.
    pub fn truncate(&self, size: usize) -> Self {
        let m = size.min(self.size());
        ProductionMatrix::from_fn(m, |i, j| self.entries[i][j].clone())
    }

    /// Zero outside the three central diagonals.
    pub fn is_tridiagonal(&self) -> bool {
        self.first_off_tridiagonal().is_none()
    }

    fn first_off_tridiagonal(&self) -> Option<(usize, usize)> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if i.abs_diff(j) > 1 && !c.is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Regenerate `order` rows of the triangle from its top entry `t00`:
    /// row `n+1` of `T` is row `n` of `T P`.
    pub fn generate(&self, t00: &R, order: usize) -> Result<Triangle<R>> {
        if order > self.size() {
            return Err(Error::InsufficientOrder {
                needed: order,
                available: self.size(),
            });
        }
        let mut rows: Vec<Vec<R>> = vec![vec![t00.clone()]];
        for n in 1..order {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    prev.iter()
                        .enumerate()
                        .fold(R::zero(), |acc, (j, t)| acc.plus(&t.times(&self.entries[j][k])))
                })
                .collect();
            rows.push(row);
        }
        Triangle::from_rows(rows)
    }
}

impl<R: fmt::Display> fmt::Debug for ProductionMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ProductionMatrix({})", self.entries.len())?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `T^{-1} T̄` on the leading `(N-1) x (N-1)` block, `N = t.order()`.
pub fn production_matrix<R: Coefficient>(t: &Triangle<R>) -> Result<ProductionMatrix<R>> {
    let n = t.order();
    if n < 2 {
        return Err(Error::InsufficientOrder { needed: 2, available: n });
    }
    let inv = t.inverse()?;
    Ok(ProductionMatrix::from_fn(n - 1, |i, j| {
        (0..=i).fold(R::zero(), |acc, k| acc.plus(&inv.get(i, k).times(&t.get(k + 1, j))))
    }))
}

/// Read a tridiagonal production matrix with unit superdiagonal as the
/// Jacobi fraction `J(a_0, a_1, ...; b_1, b_2, ...)`, `a_i = P(i,i)` and
/// `b_i = P(i,i-1)`. Levels past the block are zero, which leaves the
/// expansion exact below `x^{2m}` for a block of size `m`.
pub fn tridiagonal_to_jacobi<R>(p: &ProductionMatrix<R>) -> Result<CFrac>
where
    R: Coefficient + Into<YPoly>,
{
    if let Some((row, col)) = p.first_off_tridiagonal() {
        return Err(Error::NotTridiagonal { row, col });
    }
    let m = p.size();
    for i in 0..m.saturating_sub(1) {
        if !p.get(i, i + 1).is_one() {
            return Err(Error::BadSuperdiagonal(i));
        }
    }
    let a = (0..m).map(|i| p.get(i, i).clone().into()).collect();
    let b = (1..m).map(|i| p.get(i, i - 1).clone().into()).collect();
    Ok(CFrac::jacobi(
        CoeffSeq::finite(a).normalized(),
        CoeffSeq::finite(b).normalized(),
    ))
}

/// The `Z`- and `A`-sequences of an exponential Riordan array together with
/// the production matrix they generate.
#[derive(Clone, PartialEq)]
pub struct ZaDescription<R = Rational> {
    /// `Z(x) = g'(f̄) / g(f̄)`.
    pub z: Series<R>,
    /// `A(x) = f'(f̄)`.
    pub a: Series<R>,
    /// `p_{n,k} = n!/k! (z_{n-k} + k a_{n-k+1})`.
    pub matrix: ProductionMatrix<R>,
}

impl<R: fmt::Display> fmt::Debug for ZaDescription<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ZaDescription")
            .field("z", &self.z)
            .field("a", &self.a)
            .field("matrix", &self.matrix)
            .finish()
    }
}

/// Production matrix of `[g, f]` from its `Z`/`A` sequences, on a block of
/// size `pair.order() - 1`.
pub fn exp_production_za<R: Coefficient>(pair: &ExpRiordanPair<R>) -> Result<ZaDescription<R>> {
    let n = pair.order();
    if n < 2 {
        return Err(Error::InsufficientOrder { needed: 2, available: n });
    }
    let fbar = pair.f().truncate(n).reversion()?;
    let inner = fbar.truncate(n - 1);
    let g_at = pair.g().truncate(n - 1).compose(&inner)?;
    let z = pair.g().derivative().compose(&inner)?.div(&g_at)?;
    let a = pair.f().derivative().compose(&inner)?;
    let m = n - 1;
    let matrix = ProductionMatrix::from_fn(m, |row, k| {
        let ratio = |lo: usize| R::from_rational(big(factorial(row) / factorial(lo)));
        let mut entry = R::zero();
        if k <= row {
            entry = entry.plus(&ratio(k).times(z.coeff(row - k)));
        }
        if k >= 1 && k <= row + 1 {
            // n!/k! * k = n!/(k-1)!
            entry = entry.plus(&ratio(k - 1).times(&a.coeff_or_zero(row + 1 - k)));
        }
        entry
    });
    Ok(ZaDescription { z, a, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::riordan::RiordanPair;
    use crate::series::Fps;

    fn ints(m: &ProductionMatrix) -> Vec<Vec<i64>> {
        m.rows()
            .iter()
            .map(|r| r.iter().map(|c| c.to_integer().try_into().unwrap()).collect())
            .collect()
    }

    #[test]
    fn pascal_production() {
        let p = production_matrix(&RiordanPair::pascal(6).matrix(6).unwrap()).unwrap();
        assert_eq!(p.size(), 5);
        assert_eq!(ints(&p)[2], vec![0, 0, 1, 1, 0]);
        assert!(p.is_tridiagonal());
        let cf = tridiagonal_to_jacobi(&p).unwrap();
        assert_eq!(cf.expand_at(5, &int(0)), Fps::from_ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn catalan_production_is_tridiagonal() {
        // (c(x), x c(x)^2): production matrix diag 2 (first 1), subdiag 1
        let c = Fps::from_ints(&[1, 1, 2, 5, 14, 42, 132, 429]);
        let pair = RiordanPair::new(c.clone(), c.mul(&c).shift_up(1).truncate(8)).unwrap();
        let p = production_matrix(&pair.matrix(8).unwrap()).unwrap();
        let cf = tridiagonal_to_jacobi(&p).unwrap();
        assert_eq!(cf.alpha().take(3), vec![YPoly::int(1), YPoly::int(2), YPoly::int(2)]);
        assert_eq!(cf.beta().take(3), vec![YPoly::int(1); 3]);
        assert_eq!(p.generate(&int(1), 7).unwrap(), pair.matrix(7).unwrap());
    }

    #[test]
    fn rejects_non_tridiagonal() {
        // Catalan triangle (c, x c): production has a full first column
        let c = Fps::from_ints(&[1, 1, 2, 5, 14, 42]);
        let pair = RiordanPair::new(c.clone(), c.shift_up(1).truncate(6)).unwrap();
        let p = production_matrix(&pair.matrix(6).unwrap()).unwrap();
        assert_eq!(tridiagonal_to_jacobi(&p).unwrap_err(), Error::NotTridiagonal { row: 2, col: 0 });
    }

    #[test]
    fn bad_superdiagonal() {
        let p = ProductionMatrix::from_fn(3, |i, j| if j == i + 1 { int(2) } else { int(0) });
        assert_eq!(tridiagonal_to_jacobi(&p).unwrap_err(), Error::BadSuperdiagonal(0));
    }

    #[test]
    fn za_matches_direct_production() {
        // [1/(1-x), x]: Z = 1/(1-x), A = 1
        let g = Fps::from_ints(&[1; 7]);
        let pair = ExpRiordanPair::new(g, Fps::x(7)).unwrap();
        let za = exp_production_za(&pair).unwrap();
        assert_eq!(za.z, Fps::from_ints(&[1; 6]));
        assert_eq!(za.a, Fps::polynomial_ints(&[1], 6));
        let direct = production_matrix(&pair.matrix(7).unwrap()).unwrap();
        assert_eq!(za.matrix, direct);
    }
}
