//! Exact exterior calculus on cones over circle links.
//!
//! The crate is organised bottom-up:
//!
//! * [`exterior`]: charts, coefficient elements, forms, wedge, `d`,
//!   contractions, Lie derivatives and pullbacks, all over `ℚ(i)`.
//! * [`poisson`]: Poisson bracket, the Brylinski boundary `δ`, the
//!   symplectic star and truncated homology computations.
//! * [`cone`]: links, cones, conical symplectic forms and the compatible
//!   metric check.
//! * [`smooth`]: Euclidean smooth structures on cones over circles:
//!   membership, tangent and Nash cones, flatness, bump functions.
//! * [`report`]: configuration, checks and deterministic JSON reports
//!   behind the `conex` binary.

pub mod cone;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod poisson;
pub mod random;
pub mod report;
pub mod smooth;
pub mod trig_roots;

pub use error::{Error, Result};
