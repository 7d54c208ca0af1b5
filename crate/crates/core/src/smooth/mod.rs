//! Euclidean smooth structures on cones over circle links: membership of
//! functions, tangent and Nash cones, degree of flatness, bumps and
//! partitions of unity.

mod bump;
mod flatness;
mod function;
mod nash;

pub use bump::{bump_on_cone, partition_of_unity, sigma, smooth_step, ConeBump, PartitionOfUnity, Patch};
pub use flatness::{
    antipodal_set, construct_flatness_link, degree_of_flatness, tangent_cone, tangent_cone_sampled, FlatLocus,
    TangentCone,
};
pub use function::{
    membership, wcone_chart, wcone_decompose, wcone_membership, ConeFunction, EuclideanStructure, GeneratorSpan,
};
pub use nash::{limit_plane_normal, nash_cone_membership, tangent_plane_normal, NashReport, NASH_TOLERANCE};
