//! Exact computation of motivic, Hodge-polynomial and topological zeta
//! functions of effective Q-Cartier divisors on Q-Gorenstein varieties,
//! together with the associated limit invariants (stringy invariants and
//! their divisor/pair variants), from log-resolution data.
//!
//! The crate is organized around a pipeline:
//!
//! * [`exact`]: arbitrary-precision rationals, sparse polynomials with
//!   exponents in `(1/r)Z`, reduced rational functions;
//! * [`grothendieck`]: symbolic classes of varieties with Hodge and Euler
//!   specializations and a small expression language;
//! * [`resolution`]: validated log-resolution input data;
//! * [`surface`]: weighted dual graphs of normal surface germs, exact
//!   multiplicity/discrepancy solving, stratification, blow-ups;
//! * [`zeta`]: assembly and reduction of the zeta function at the three
//!   levels;
//! * [`stringy`]: the limit invariants at `s -> 1` and `s -> -1`;
//! * [`padic`]: a brute-force p-adic oracle for cross-checking;
//! * [`cli`]: input documents, commands and renderers used by the binary.
//!
//! Everything is exact; see the `examples/` directory for runnable tours
//! of each capability.

pub mod cli;
pub mod error;
pub mod exact;
pub mod grothendieck;
pub mod padic;
pub mod resolution;
pub mod rng;
pub mod stringy;
pub mod surface;
pub mod zeta;

pub use error::{Error, Result};
