//! Exact-arithmetic derangement families.
//!
//! Everything here is computed over arbitrary-precision rationals: classical
//! derangement numbers and polynomials, their probabilistic generalizations
//! driven by the raw moments of a random variable `Y`, and a verification
//! harness that checks each identity through independent computation routes
//! (closed-form sums, truncated exponential-generating-function algebra,
//! brute-force enumeration, Monte Carlo estimation).

pub mod classical;
pub mod error;
pub mod kernel;
pub mod moments;
pub mod probabilistic;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::poly::Poly;
pub use kernel::rational::Rational;
pub use kernel::series::EgfSeries;
pub use moments::{DistributionSpec, MomentProvider};
pub use probabilistic::ProbabilisticContext;
