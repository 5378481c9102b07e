//! Exact univariate and truncated-bivariate polynomial arithmetic.
//!
//! [`Poly`] is a dense polynomial in `x` with `BigInt` coefficients; it houses
//! every h-, f-, and coordinator polynomial in the crate. [`BivPoly`] is a
//! finite polynomial in `z` whose coefficients are `Poly`s in `x`, and
//! [`BiSeries`] is a power series in `z` truncated at a fixed order. Rational
//! generating functions are expanded with [`series_expand_rational`], which
//! stays in integer arithmetic throughout.

mod fvector;
mod poly;
mod series;

pub use fvector::{transform_f_to_h, transform_h_to_f, FVector};
pub use poly::{even_binomial_poly, expand_growth, Poly};
pub use series::{series_expand_rational, BiSeries, BivPoly};

use num_bigint::BigInt;
use thiserror::Error;

/// Default truncation order for series work; covers checks up to rank 16.
pub const DEFAULT_SERIES_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Series inversion needs the `z^0 x^0` coefficient of the denominator to
    /// be a unit, and every per-order polynomial division to come out exact.
    #[error("denominator is not invertible as an integer power series (z^0 x^0 coefficient {constant_term}, division exact: {division_exact})")]
    NonInvertibleDenominator {
        constant_term: BigInt,
        division_exact: bool,
    },
    /// A reversal or reindexing was asked for at a degree below the input's.
    #[error("polynomial degree {degree} exceeds the requested bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
}
