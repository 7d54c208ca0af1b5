//! Links in spheres, cones over them and conical symplectic forms
//! `ω̄ = t²ω̂ + t dt∧α`, with the Liouville identities checked exactly.

mod conical;
mod link;
mod metric;
mod quotient;

pub use conical::{
    ambient_omega_pullback, check_nondegenerate, liouville_identities, make_cone_symplectic, ConeSpace,
    ConicalSymplecticForm, LiouvilleReport, NondegeneracyWitness,
};
pub use link::{
    circle_chart, latitude, perturbed_circle, quadric_constraints, quadric_link, standard_circle,
    standard_sphere_contact, Link, StandardSphere,
};
pub use metric::{metric_c1_check, MetricPerturbation, MetricReport, PROBE_RADIUS, PROBE_STEP};
pub use quotient::{group_quotient_cone, AngularRotation, QuotientCone};

#[cfg(test)]
mod tests;
