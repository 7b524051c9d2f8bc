//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Reciprocal of a series whose constant term is zero (or, for
    /// polynomial coefficients, not an invertible constant).
    #[error("series reciprocal requires an invertible constant term")]
    ZeroConstantTerm,

    /// Exponential of a series whose constant term is not zero.
    #[error("series exponential requires a zero constant term")]
    NonzeroConstantTerm,

    /// A distribution parameter is outside its legal range.
    #[error("invalid distribution parameter: {0}")]
    InvalidParameter(String),

    /// A moment was requested past the end of an explicit moment list.
    #[error("moment of order {requested} unavailable (moments known up to order {available})")]
    MomentOutOfRange { requested: usize, available: usize },

    /// Sampling requested from a provider without a sampler.
    #[error("distribution has no sampler")]
    NoSampler,

    /// Brute-force enumeration request past the size bound.
    #[error("enumeration size {size} exceeds the bound {bound}")]
    SizeLimit { size: usize, bound: usize },

    /// An r-derangement index below r, where the family is undefined.
    #[error("r-derangement index n={n} is below r={r}")]
    IndexBelowR { n: usize, r: usize },

    /// A text form that does not parse as a rational, distribution spec,
    /// or theorem selection.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
