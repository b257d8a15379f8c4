//! Brute-force weighted lattice path counts.
//!
//! Paths are walked one step at a time with height bookkeeping and the step
//! weights multiplied along the way. Nothing is cached: this is the oracle
//! the continued-fraction expansions are checked against, so it shares no
//! code with them.

use crate::cfrac::{CFrac, CfKind};
use crate::error::{Error, Result};
use crate::series::Coefficient;
use crate::ypoly::YPoly;

/// Largest size accepted by [`count_weighted_paths`].
pub const MAX_SIZE: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    /// Rises and falls; size = semi-length.
    Dyck,
    /// Rises, falls and unit horizontals; size = length.
    Motzkin,
    /// Rises, falls and horizontals of length 2; size = semi-length.
    Schroeder,
}

impl PathKind {
    /// Path family whose weighted counts a fraction of this kind enumerates.
    pub fn for_cfrac(kind: CfKind) -> PathKind {
        match kind {
            CfKind::Stieltjes => PathKind::Dyck,
            CfKind::Jacobi => PathKind::Motzkin,
            CfKind::Thron => PathKind::Schroeder,
        }
    }
}

/// Weight per starting level: explicit values, then `tail` for every higher level.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelWeights<R = YPoly> {
    pub prefix: Vec<R>,
    pub tail: R,
}

impl<R: Coefficient> LevelWeights<R> {
    pub fn new(prefix: Vec<R>, tail: R) -> Self {
        LevelWeights { prefix, tail }
    }

    pub fn uniform(w: R) -> Self {
        LevelWeights::new(Vec::new(), w)
    }

    pub fn get(&self, level: usize) -> &R {
        self.prefix.get(level).unwrap_or(&self.tail)
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> LevelWeights<S> {
        LevelWeights::new(self.prefix.iter().map(&f).collect(), f(&self.tail))
    }
}

impl<R: Coefficient> Default for LevelWeights<R> {
    fn default() -> Self {
        LevelWeights::uniform(R::one())
    }
}

/// Step weights. A rise or horizontal is indexed by the height it starts at;
/// a fall by the height it starts from (so falls start at height >= 1).
#[derive(Clone, Debug, PartialEq)]
pub struct WeightScheme<R = YPoly> {
    pub rise: LevelWeights<R>,
    pub fall: LevelWeights<R>,
    pub horizontal: LevelWeights<R>,
}

impl<R: Coefficient> Default for WeightScheme<R> {
    fn default() -> Self {
        WeightScheme {
            rise: LevelWeights::default(),
            fall: LevelWeights::default(),
            horizontal: LevelWeights::default(),
        }
    }
}

impl<R: Coefficient> WeightScheme<R> {
    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> WeightScheme<S> {
        WeightScheme {
            rise: self.rise.map(&f),
            fall: self.fall.map(&f),
            horizontal: self.horizontal.map(&f),
        }
    }
}

impl WeightScheme<YPoly> {
    /// Weights under which the path family of `cf` is counted by its
    /// expansion: rises weigh 1, a fall from height `i` carries the `i`-th
    /// numerator, a horizontal at height `i` the `i`-th linear coefficient.
    /// Exact for paths staying below height `levels`.
    pub fn from_cfrac(cf: &CFrac, levels: usize) -> Self {
        let falls: Vec<YPoly> = (1..=levels).map(|i| cf.numerator(i - 1)).collect();
        let mut fall_prefix = vec![YPoly::zero()];
        fall_prefix.extend(falls);
        let horizontal = match cf.kind() {
            CfKind::Stieltjes => LevelWeights::uniform(YPoly::zero()),
            _ => LevelWeights::new((0..=levels).map(|i| cf.linear(i)).collect(), cf.linear(levels + 1)),
        };
        WeightScheme {
            rise: LevelWeights::default(),
            fall: LevelWeights::new(fall_prefix, cf.numerator(levels)),
            horizontal,
        }
    }
}

/// Sum over all paths of the given kind and size of the product of their
/// step weights.
pub fn count_weighted_paths<R: Coefficient>(kind: PathKind, n: usize, w: &WeightScheme<R>) -> Result<R> {
    if n > MAX_SIZE {
        return Err(Error::TooLarge { n, max: MAX_SIZE });
    }
    let length = match kind {
        PathKind::Motzkin => n,
        PathKind::Dyck | PathKind::Schroeder => 2 * n,
    };
    let mut total = R::zero();
    walk(kind, w, length, 0, R::one(), &mut total);
    Ok(total)
}

fn walk<R: Coefficient>(kind: PathKind, w: &WeightScheme<R>, remaining: usize, height: usize, acc: R, total: &mut R) {
    if remaining == 0 {
        if height == 0 {
            *total = total.plus(&acc);
        }
        return;
    }
    if height > remaining || acc.is_zero() {
        return;
    }
    // rise
    if height < remaining {
        walk(kind, w, remaining - 1, height + 1, acc.times(w.rise.get(height)), total);
    }
    // fall
    if height > 0 {
        walk(kind, w, remaining - 1, height - 1, acc.times(w.fall.get(height)), total);
    }
    // horizontal
    match kind {
        PathKind::Dyck => {}
        PathKind::Motzkin => walk(kind, w, remaining - 1, height, acc.times(w.horizontal.get(height)), total),
        PathKind::Schroeder if remaining >= 2 => {
            walk(kind, w, remaining - 2, height, acc.times(w.horizontal.get(height)), total)
        }
        PathKind::Schroeder => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{big, binomial, catalan, int, Rational};

    fn plain() -> WeightScheme<Rational> {
        WeightScheme::default()
    }

    fn counts(kind: PathKind, upto: usize, w: &WeightScheme<Rational>) -> Vec<Rational> {
        (0..upto).map(|n| count_weighted_paths(kind, n, w).unwrap()).collect()
    }

    #[test]
    fn unweighted_families() {
        assert_eq!(counts(PathKind::Dyck, 6, &plain()), [1, 1, 2, 5, 14, 42].map(int).to_vec());
        assert_eq!(counts(PathKind::Schroeder, 6, &plain()), [1, 2, 6, 22, 90, 394].map(int).to_vec());
        assert_eq!(counts(PathKind::Motzkin, 6, &plain()), [1, 1, 2, 4, 9, 21].map(int).to_vec());
    }

    #[test]
    fn colored_level_zero_motzkin() {
        let w = WeightScheme {
            rise: LevelWeights::new(vec![int(5)], int(4)),
            fall: LevelWeights::default(),
            horizontal: LevelWeights::new(vec![int(4)], int(1)),
        };
        assert_eq!(counts(PathKind::Motzkin, 5, &w), [1, 4, 21, 109, 586].map(int).to_vec());
    }

    #[test]
    fn motzkin_binomial_catalan_identity() {
        for n in 0..=10 {
            let expect: num_bigint::BigInt = (0..=n / 2).map(|k| binomial(n, 2 * k) * catalan(k)).sum();
            assert_eq!(count_weighted_paths(PathKind::Motzkin, n, &plain()).unwrap(), big(expect));
        }
    }

    #[test]
    fn schroeder_binomial_catalan_identity() {
        for n in 0..=8 {
            let expect: num_bigint::BigInt = (0..=n).map(|k| binomial(n + k, 2 * k) * catalan(k)).sum();
            assert_eq!(count_weighted_paths(PathKind::Schroeder, n, &plain()).unwrap(), big(expect));
        }
    }

    #[test]
    fn size_guard() {
        let err = count_weighted_paths(PathKind::Dyck, MAX_SIZE + 1, &plain()).unwrap_err();
        assert_eq!(err, Error::TooLarge { n: 15, max: 14 });
    }

    #[test]
    fn symbolic_weights() {
        // Dyck paths with falls from height 1 weighted y: Narayana-like refinement
        let w = WeightScheme {
            rise: LevelWeights::default(),
            fall: LevelWeights::new(vec![YPoly::zero(), YPoly::y()], YPoly::one()),
            horizontal: LevelWeights::default(),
        };
        // n = 2: UDUD -> y^2, UUDD -> y
        assert_eq!(count_weighted_paths(PathKind::Dyck, 2, &w).unwrap(), YPoly::from_ints(&[0, 1, 1]));
    }
}
