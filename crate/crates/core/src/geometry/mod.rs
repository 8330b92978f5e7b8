//! Dimension-generic constants, enclosing balls, caps, lenses and spindles.

pub mod caps;
pub mod constants;
pub mod meb;
pub mod quadrature;
pub mod shapes;
pub mod steiner;
pub mod types;

pub use caps::{cap_lateral_area, cap_volume};
pub use constants::{intrinsic_ball_constant, unit_ball_volume};
pub use meb::{minimal_enclosing_ball, EnclosingBall};
pub use shapes::{lens_measures, spindle_measures, LensSpec, SpindleSpec};
pub use steiner::steiner_eval;
pub use types::{BallSpec, IntrinsicProfile, PointConfig, Provenance, ToleranceProfile};
