//! Exact arithmetic: arbitrary-precision rationals, sparse polynomials
//! with fractional exponents, and reduced rational functions.
//!
//! All values are immutable after construction, operations are pure, and
//! nothing here touches floating point.

pub mod poly;
pub mod ratfrac;
pub mod rational;

pub use poly::{FracPoly, Mono, VarSet};
pub use ratfrac::{gcd_univariate, FracValue, RatFrac, ValueOrInfinity};
pub use rational::Rational;
