//! Exact planar kernel: intersections of disks represented as arc polygons.

pub mod checks;
pub mod hull;
pub mod measures;
pub mod optimize;
pub mod region;

pub use checks::{check_minkowski_identity_2d, check_symmetral_2d};
pub use hull::{ball_hull_2d, contains_2d, nearest_point_2d, support_2d, Containment};
pub use measures::{measures, PlanarMeasures};
pub use region::{
    disk_intersection, disk_intersection_mixed, disk_intersection_points, Arc, ArcPolygon, RegionKind, P2,
};
