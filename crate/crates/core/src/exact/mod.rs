//! Exact arithmetic substrate: rationals, polynomials, truncated Laurent
//! series and Bernoulli numbers.

pub mod bernoulli;
pub mod laurent;
pub mod polynomial;
pub mod rational;

pub use bernoulli::{bernoulli_numbers, BernoulliTable};
pub use laurent::{Coefficient, LaurentSeries, SeriesError};
pub use polynomial::{Indeterminate, ParsePolynomialError, Polynomial};
pub use rational::{ParseRationalError, Rational};
