//! Separating semigroups of real algebraic curves of dividing type.
//!
//! * [`exactpoly`]: exact rational polynomials, Sturm counts, root isolation.
//! * [`vandermonde`]: sign patterns of solutions to `sum x_i^k h_i = 0`.
//! * [`semigroup`]: membership oracles for M-curves, hyperelliptic curves and
//!   hyperbolic quartics.
//! * [`hyperelliptic`]: curves `y^2 = G(x)`, factored morphisms and point
//!   certificates.
//! * [`quartic`]: plane quartics and projections from a point.
//! * [`sweep`] and [`cli`]: exhaustive cross-checks and the command line.

pub mod cli;
pub mod exactpoly;
pub mod hyperelliptic;
pub mod linalg;
pub mod quartic;
pub mod rational;
pub mod semigroup;
pub mod sweep;
pub mod vandermonde;

pub use rational::Rational;
