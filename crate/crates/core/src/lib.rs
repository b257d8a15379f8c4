//! Exact Riordan arrays and continued fractions.
//!
//! Everything here works over the rationals (or polynomials in a marker
//! variable `y` with rational coefficients) on truncated power series whose
//! precision is carried explicitly. The pieces are:
//!
//! - [`series`]: truncated formal power series, composition, reversion, square roots.
//! - [`riordan`]: ordinary Riordan arrays `(g, f)` and their group structure.
//! - [`cfrac`]: Stieltjes, Jacobi and Thron continued fractions and the constructors
//!   that turn level-0-perturbed fractions into Riordan arrays.
//! - [`lattice`]: brute-force weighted Dyck, Motzkin and Schröder path counts,
//!   used as an oracle for continued-fraction expansions.
//! - [`production`]: production matrices, tridiagonal extraction and the `Z`/`A`
//!   description for exponential arrays.
//! - [`eriordan`]: exponential Riordan arrays and multiplier families.
//! - [`orthopoly`]: coefficient arrays of orthogonal and Laurent biorthogonal
//!   polynomials and their moments.
//! - [`triangles`]: Narayana-type triangles, triangle algebra and sequence transforms.

pub mod cfrac;
pub mod eriordan;
pub mod error;
pub mod lattice;
pub mod orthopoly;
pub mod production;
pub mod rational;
pub mod riordan;
pub mod series;
pub mod triangle;
pub mod triangles;
pub mod ypoly;

pub use cfrac::{CFrac, CfKind, CoeffSeq, Tail};
pub use eriordan::{ExpRiordanPair, MultiplierFamily, Multipliers};
pub use error::{Error, Result};
pub use lattice::{PathKind, WeightScheme};
pub use production::ProductionMatrix;
pub use rational::Rational;
pub use riordan::RiordanPair;
pub use series::{BiSeries, Coefficient, Fps, Series};
pub use triangle::Triangle;
pub use ypoly::YPoly;
