//! Intersections of congruent balls: exact planar kernel, numerical engine for
//! any dimension, spherical neighborhoods, and seeded verification suites.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod highd;
pub mod linalg;
pub mod planar;
pub mod rng;
pub mod sphere;
pub mod verify;

pub use error::{Error, Result};
