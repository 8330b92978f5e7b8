//! Numerical engine for r-ball bodies in any dimension.

pub mod body;
pub mod directions;
pub mod estimate;
pub mod hull;
pub mod inradius;
pub mod mc;
pub mod support;

pub use body::{member_polyhedron, project_body, project_polyhedron, Body};
pub use estimate::Estimate;
pub use hull::{hull_membership, hull_outer_approx, HullMembership, OuterHullApprox};
pub use inradius::{inradius_certified, InradiusCertificate};
pub use mc::{mc_surface_polyhedron, mc_volume_polyhedron, mean_width_polyhedron};
pub use support::{support_body, support_polyhedron, SupportPoint};
