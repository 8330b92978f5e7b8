//! Spherical caps of a Euclidean ball.

use super::constants::{unit_ball_volume, unit_sphere_area};
use super::quadrature::integrate;
use crate::error::{Error, Result};
use std::f64::consts::PI;

pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// `∫_0^θ sin^n t dt`.
pub fn sin_power_integral(n: i32, theta: f64, rel_tol: f64) -> f64 {
    match n {
        0 => theta,
        1 => 1.0 - theta.cos(),
        _ => integrate(|t: f64| t.sin().powi(n), 0.0, theta, rel_tol),
    }
}

/// Volume of the cap of height `h` cut from `B^d[o, R]`.
pub fn cap_volume(d: usize, radius: f64, h: f64) -> Result<f64> {
    cap_volume_tol(d, radius, h, DEFAULT_REL_TOL)
}

pub fn cap_volume_tol(d: usize, radius: f64, h: f64, rel_tol: f64) -> Result<f64> {
    if d == 0 {
        return Err(Error::OutOfRange {
            what: "dimension",
            value: 0.0,
        });
    }
    if !(radius > 0.0) {
        return Err(Error::OutOfRange {
            what: "cap radius",
            value: radius,
        });
    }
    let slack = 1e-12 * radius;
    if !(h >= -slack && h <= 2.0 * radius + slack) {
        return Err(Error::OutOfRange {
            what: "cap height",
            value: h,
        });
    }
    let h = h.clamp(0.0, 2.0 * radius);
    if h == 0.0 {
        return Ok(0.0);
    }
    let full = unit_ball_volume(d) * radius.powi(d as i32);
    if h == 2.0 * radius {
        return Ok(full);
    }
    if h == radius {
        return Ok(full / 2.0);
    }
    // Use the smaller cap and the complement to keep the integrand range short.
    if h > radius {
        return Ok(full - cap_volume_tol(d, radius, 2.0 * radius - h, rel_tol)?);
    }
    let theta = ((radius - h) / radius).clamp(-1.0, 1.0).acos();
    Ok(unit_ball_volume(d - 1) * radius.powi(d as i32) * sin_power_integral(d as i32, theta, rel_tol))
}

/// Lateral measure of the cap of angular radius `theta` on the sphere of radius `R` in `E^d`.
pub fn cap_lateral_area(d: usize, radius: f64, theta: f64) -> Result<f64> {
    cap_lateral_area_tol(d, radius, theta, DEFAULT_REL_TOL)
}

pub fn cap_lateral_area_tol(d: usize, radius: f64, theta: f64, rel_tol: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::OutOfRange {
            what: "dimension",
            value: d as f64,
        });
    }
    if !(radius >= 0.0) {
        return Err(Error::OutOfRange {
            what: "cap radius",
            value: radius,
        });
    }
    if !(-1e-12..=PI + 1e-12).contains(&theta) {
        return Err(Error::OutOfRange {
            what: "cap angle",
            value: theta,
        });
    }
    let theta = theta.clamp(0.0, PI);
    let scale = radius.powi(d as i32 - 1);
    if theta == PI {
        return Ok(unit_sphere_area(d) * scale);
    }
    let sphere_low = (d - 1) as f64 * unit_ball_volume(d - 1);
    if theta > PI / 2.0 {
        let rest = sin_power_integral(d as i32 - 2, PI - theta, rel_tol);
        return Ok(unit_sphere_area(d) * scale - sphere_low * scale * rest);
    }
    Ok(sphere_low * scale * sin_power_integral(d as i32 - 2, theta, rel_tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn segment_area(r: f64, h: f64) -> f64 {
        r * r * ((r - h) / r).acos() - (r - h) * (2.0 * r * h - h * h).sqrt()
    }

    #[test]
    fn planar_segment() {
        let v = cap_volume(2, 2.0, 1.0).unwrap();
        assert_relative_eq!(v, segment_area(2.0, 1.0), max_relative = 1e-12);
        assert_relative_eq!(v, 4.0 * PI / 3.0 - 3f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn spatial_cap() {
        assert_relative_eq!(cap_volume(3, 1.0, 0.5).unwrap(), 5.0 * PI / 24.0, max_relative = 1e-12);
        // large cap via complement, oracle π h² (R − h/3)
        let h: f64 = 1.7;
        assert_relative_eq!(
            cap_volume(3, 1.0, h).unwrap(),
            PI * h * h * (1.0 - h / 3.0),
            max_relative = 1e-12
        );
    }

    #[test]
    fn half_and_full_ball() {
        for d in 1..9 {
            let w = unit_ball_volume(d) * 1.5f64.powi(d as i32);
            assert_relative_eq!(cap_volume(d, 1.5, 1.5).unwrap(), w / 2.0, max_relative = 1e-14);
            assert_relative_eq!(cap_volume(d, 1.5, 3.0).unwrap(), w, max_relative = 1e-14);
        }
        // the half ball also through quadrature
        let q = unit_ball_volume(4) * sin_power_integral(5, PI / 2.0, 1e-12);
        assert_relative_eq!(q, unit_ball_volume(5) / 2.0, max_relative = 1e-11);
    }

    #[test]
    fn cap_agrees_with_incomplete_beta() {
        // V_cap / V_ball = ½ I_{(2Rh−h²)/R²}((d+1)/2, 1/2) for h ≤ R
        for d in 2..8 {
            for &h in &[0.1, 0.4, 0.9] {
                let x = 2.0 * h - h * h;
                let ratio = 0.5 * statrs::function::beta::beta_reg((d as f64 + 1.0) / 2.0, 0.5, x);
                assert_relative_eq!(
                    cap_volume(d, 1.0, h).unwrap(),
                    ratio * unit_ball_volume(d),
                    max_relative = 1e-9
                );
            }
        }
    }

    #[test]
    fn lateral_areas() {
        assert_relative_eq!(
            cap_lateral_area(3, 1.0, PI / 2.0).unwrap(),
            2.0 * PI,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            cap_lateral_area(3, 2.0, PI / 3.0).unwrap(),
            4.0 * PI,
            max_relative = 1e-12
        );
        assert_relative_eq!(cap_lateral_area(2, 1.0, 0.7).unwrap(), 1.4, max_relative = 1e-14);
        assert_relative_eq!(cap_lateral_area(3, 2.0, PI).unwrap(), 16.0 * PI, max_relative = 1e-14);
        // zone oracle beyond the equator
        let t: f64 = 2.2;
        assert_relative_eq!(
            cap_lateral_area(3, 1.0, t).unwrap(),
            2.0 * PI * (1.0 - t.cos()),
            max_relative = 1e-12
        );
    }

    #[test]
    fn out_of_range_inputs() {
        assert!(cap_volume(3, 1.0, 2.5).is_err());
        assert!(cap_volume(3, 1.0, -0.1).is_err());
        assert!(cap_lateral_area(3, 1.0, 4.0).is_err());
    }

    proptest! {
        #[test]
        fn cap_volume_nondecreasing(d in 1usize..7, h1 in 0.0f64..2.0, h2 in 0.0f64..2.0) {
            let (lo, hi) = if h1 <= h2 { (h1, h2) } else { (h2, h1) };
            prop_assert!(cap_volume(d, 1.0, lo).unwrap() <= cap_volume(d, 1.0, hi).unwrap() + 1e-12);
        }
    }
}
