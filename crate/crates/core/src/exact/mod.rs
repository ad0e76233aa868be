//! Exact arithmetic over the rationals: scalars, polynomials, rational
//! functions and truncated power series.

mod poly;
mod ratfunc;
mod scalar;
mod series;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::{poch, Rat};
pub use series::{binomial_series, GenSeries, TruncatedSeries};
