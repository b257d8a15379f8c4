//! Lower-triangular number triangles.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::series::{BiSeries, Coefficient, Series};
use crate::ypoly::YPoly;

/// Lower-triangular matrix with rows `0..order`; row `n` holds `n + 1` entries.
#[derive(Clone, PartialEq)]
pub struct Triangle<R = Rational> {
    rows: Vec<Vec<R>>,
}

impl<R: Coefficient> Triangle<R> {
    /// Rows may be given with or without their trailing zeros; they are padded
    /// to length `n + 1`. Entries past the diagonal must be zero.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for (n, mut row) in rows.into_iter().enumerate() {
            if row.len() > n + 1 {
                if row[n + 1..].iter().any(|c| !c.is_zero()) {
                    return Err(Error::NotLowerTriangular(n));
                }
                row.truncate(n + 1);
            }
            row.resize(n + 1, R::zero());
            out.push(row);
        }
        Ok(Triangle { rows: out })
    }

    pub fn from_fn(order: usize, mut entry: impl FnMut(usize, usize) -> R) -> Self {
        Triangle {
            rows: (0..order)
                .map(|n| (0..=n).map(|k| entry(n, k)).collect())
                .collect(),
        }
    }

    pub fn identity(order: usize) -> Self {
        Triangle::from_fn(order, |n, k| if n == k { R::one() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    /// Entry `(n, k)`; zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> R {
        if k > n {
            R::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Triangle {
            rows: self.rows[..order.min(self.order())].to_vec(),
        }
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> Triangle<S> {
        Triangle {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    /// Matrix product on the common leading block.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Triangle::from_fn(n, |i, j| {
            (j..=i).fold(R::zero(), |acc, k| acc.plus(&self.rows[i][k].times(&rhs.rows[k][j])))
        })
    }

    /// Exact inverse by forward substitution; every diagonal entry must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let diag_inv = (0..n)
            .map(|i| self.rows[i][i].unit_inverse().ok_or(Error::SingularDiagonal(i)))
            .collect::<Result<Vec<R>>>()?;
        let mut inv: Vec<Vec<R>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = vec![R::zero(); i + 1];
            row[i] = diag_inv[i].clone();
            for j in (0..i).rev() {
                // sum_{k=j}^{i-1} T(i,k) inv(k,j) + T(i,i) inv(i,j) = 0
                let mut acc = R::zero();
                for (k, inv_row) in inv.iter().enumerate().take(i).skip(j) {
                    acc = acc.plus(&self.rows[i][k].times(&inv_row[j]));
                }
                row[j] = acc.times(&diag_inv[i]).negated();
            }
            inv.push(row);
        }
        Ok(Triangle { rows: inv })
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, row)| {
            row.iter()
                .enumerate()
                .all(|(k, c)| if n == k { c.is_one() } else { c.is_zero() })
        })
    }

    /// Column `k` as the sequence `T(n, k)`, `n in 0..order`, leading zeros included.
    pub fn column(&self, k: usize) -> Series<R> {
        Series::from_coeffs((0..self.order()).map(|n| self.get(n, k)).collect())
    }

    /// Row sums `sum_k T(n, k)`.
    pub fn row_sums(&self) -> Vec<R> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(R::zero(), |a, c| a.plus(c)))
            .collect()
    }

    /// Diagonal sums `sum_k T(n - k, k)`.
    pub fn diagonal_sums(&self) -> Vec<R> {
        (0..self.order())
            .map(|n| {
                (0..=n / 2).fold(R::zero(), |a, k| a.plus(&self.get(n - k, k)))
            })
            .collect()
    }

    /// Alternating row sums `sum_k (-1)^k T(n, k)`.
    pub fn alternating_sums(&self) -> Vec<R> {
        self.rows
            .iter()
            .map(|r| {
                r.iter().enumerate().fold(R::zero(), |a, (k, c)| {
                    if k % 2 == 0 {
                        a.plus(c)
                    } else {
                        a.minus(c)
                    }
                })
            })
            .collect()
    }

    /// Multiply by a column vector: `(T v)_n = sum_k T(n,k) v_k`.
    pub fn apply(&self, v: &[R]) -> Vec<R> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(R::zero(), |a, (t, x)| a.plus(&t.times(x)))
            })
            .collect()
    }
}

impl Triangle<Rational> {
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Triangle::from_rows(rows.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect())
            .expect("integer rows must be lower triangular")
    }

    /// Pack rows into `G(x, y) = sum T(n,k) x^n y^k`.
    pub fn to_bivariate(&self) -> BiSeries {
        Series::from_coeffs(self.rows.iter().map(|r| YPoly::new(r.clone())).collect())
    }

    /// Read a triangle off a bivariate series: entry `(n, k) = [x^n][y^k] G`.
    pub fn from_bivariate(g: &BiSeries) -> Result<Self> {
        Triangle::from_rows(g.coeffs().iter().map(|p| p.coeffs().to_vec()).collect())
    }
}

impl<R: fmt::Display> fmt::Debug for Triangle<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Triangle(order {})", self.rows.len())?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}
