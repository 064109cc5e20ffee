//! Exact arithmetic: big rationals, special numbers, multivariate polynomials,
//! discrete summation and interpolation.

mod combinatorics;
mod interp;
mod poly;
mod quasi;
mod rational;

pub use combinatorics::{
    basic_combinatorics, binomial, double_factorial, eulerian, factorial, stirling2, Combinatorial,
};
pub use interp::{interpolate, interpolate_grid, newton_coefficients, GridAxes};
pub use poly::{discrete_antiderivative, power_sum_polynomial, MultiPolynomial};
pub use quasi::QuasiPolynomial;
pub use rational::{format_rational, int, parse_rational, rat, serde_rational, Rational};
