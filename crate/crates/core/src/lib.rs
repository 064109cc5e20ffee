//! Exact computation of simple, pruned, orbifold and Belyi Hurwitz numbers.
//!
//! Every quantity is computed by at least two independent routes so that the
//! routes can be checked against each other:
//!
//! * [`symgroup`] enumerates symmetric-group factorisations directly;
//! * [`recursion`] evaluates the pruned cut-and-join recursions with a memo cache;
//! * [`pruning`] converts between pruned and unpruned counts;
//! * [`intersection`] reads psi-class intersection numbers off the pruned
//!   polynomials and recomputes them by the Witten–Kontsevich recursion;
//! * [`belyi`] counts fatgraphs, lattice points in moduli-space cells and the
//!   stationary Gromov–Witten quasi-polynomials.
//!
//! All arithmetic is exact ([`Rational`] is a reduced big rational).

pub mod arith;
pub mod belyi;
pub mod error;
pub mod intersection;
pub mod pruning;
pub mod recursion;
pub mod symgroup;

pub use arith::{format_rational, parse_rational, MultiPolynomial, QuasiPolynomial, Rational};
pub use error::{Budget, Error, Result};
pub use intersection::BracketKey;
pub use symgroup::Permutation;
