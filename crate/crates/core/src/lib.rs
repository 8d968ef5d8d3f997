//! Noncommutative word algebra for multiple zeta values.
//!
//! Words in `x`, `y` stand for iterated sums: the admissible word
//! `x^(k1-1) y ... x^(kl-1) y` maps to `zeta(k1, ..., kl)`. This crate
//! provides the two commutative products on words, the derivations and
//! quasi-symmetric actions that generate linear relations, exact rank
//! computations for those relations, and high-precision evaluation to
//! check them numerically.

pub mod derivations;
pub mod error;
pub mod linalg;
pub mod numerics;
pub mod parse;
pub mod poly;
pub mod products;
pub mod qsym;
pub mod relations;
pub mod series;
pub mod word;

pub use error::{Error, Result};
pub use poly::{Coeff, Poly, TensorPoly};
pub use relations::{Family, Relation};
pub use series::TruncatedSeries;
pub use word::{Composition, CyclicClass, Letter, Word};
