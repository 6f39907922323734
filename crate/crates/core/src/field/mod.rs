//! Exact arithmetic in ℚ(s, Λ), where `q = s²` and `Λ = q^λ`.

mod dense;
mod intpoly;
mod ratfunc;
pub mod text;

pub use intpoly::{IntPoly, Monomial};
pub use ratfunc::RatFunc;
pub use text::Style;

/// Reduced fraction of arbitrary-precision integers.
pub type ExactRational = num_rational::BigRational;
