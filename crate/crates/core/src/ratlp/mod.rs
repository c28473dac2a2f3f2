//! Exact rational arithmetic, linear algebra and certified LP feasibility.

mod lp;
mod matrix;
mod rational;

pub use lp::{
    convex_membership, interior_membership, phase_one, ColumnSet, ConeWitness, Feasibility,
    HullVerdict, InteriorCertificate, MembershipCertificate,
};
pub use matrix::{
    from_ints, identity, int_determinant, invert_matrix, mat_mul, mat_vec, RatMatrix,
};
pub use rational::{RatVector, Rational};
