//! Poisson bracket, the Brylinski boundary `δ = i(G)d − d i(G)`, the
//! symplectic star, and truncated homology of the `d`- and `δ`-complexes on
//! `(ℝ^{2n}, ω₀)`, optionally restricted to `Z_k`-invariant forms.

mod complex;
mod group;
mod symplectic;

pub use complex::{basis_sizes, build_stratified_complex, homology_ranks, naive_homology_ranks, ComplexStratum, Operator};
pub use group::{GroupAction, Matrix};
pub use symplectic::SymplecticChart;

#[cfg(test)]
mod tests;
