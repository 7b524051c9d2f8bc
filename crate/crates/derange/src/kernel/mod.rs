//! Exact arithmetic kernel: rationals, polynomials in `x`, and truncated
//! exponential-generating-function series in `t`.

pub mod poly;
pub mod rational;
pub mod series;

pub use poly::Poly;
pub use rational::{binomial, binomial_signed, factorial, parse_rational, rat, ratio, Rational};
pub use series::{EgfSeries, SeriesCoeff};
