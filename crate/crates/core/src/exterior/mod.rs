//! Exact multilinear algebra on coordinate charts.
//!
//! Everything here is immutable and `Send + Sync`; operations are pure.
//!
//! Sign convention for bivector contraction: `i(U∧W) a := i_U(i_W a)`, so
//! `i(∂_y∧∂_x)(dx∧dy) = 1` and the Poisson bracket built on top of it gives
//! `{x, y} = 1`.

pub mod chart;
pub mod coefficient;
pub mod form;
pub mod pullback;
pub mod scalar;

pub use chart::{Chart, VarKind, Variable};
pub use coefficient::{Coefficient, Exponent};
pub use form::{Basis, BivectorField, DifferentialForm, VectorField};
pub use pullback::{ChartMap, MapComponent};
pub use scalar::{Rational, Scalar};

#[cfg(test)]
mod tests;
