//! Lenses (two-ball intersections) and spindles (r-ball hulls of two points).

use super::caps::{cap_lateral_area_tol, cap_volume_tol};
use super::constants::{intrinsic_ball_constant, unit_ball_volume};
use super::quadrature::integrate;
use super::types::{IntrinsicProfile, Provenance, ToleranceProfile};
use crate::error::{Error, Result};
use crate::linalg;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

/// `L_{r,ρ,d} = B[a·axis, r] ∩ B[−a·axis, r]` with `a = r − ρ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LensSpec {
    pub dim: usize,
    pub r: f64,
    pub inradius: f64,
    pub axis: Vec<f64>,
}

/// `S_{r,λ,d}`, the r-ball hull of `±λ·axis`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpindleSpec {
    pub dim: usize,
    pub r: f64,
    pub circumradius: f64,
    pub axis: Vec<f64>,
}

fn check_dim_r(dim: usize, r: f64) -> Result<()> {
    if dim < 1 {
        return Err(Error::OutOfRange {
            what: "dimension",
            value: dim as f64,
        });
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::OutOfRange {
            what: "radius r",
            value: r,
        });
    }
    Ok(())
}

impl LensSpec {
    pub fn new(dim: usize, r: f64, inradius: f64) -> Result<Self> {
        check_dim_r(dim, r)?;
        if !(inradius > 0.0 && inradius <= r) {
            return Err(Error::OutOfRange {
                what: "lens inradius",
                value: inradius,
            });
        }
        Ok(LensSpec {
            dim,
            r,
            inradius,
            axis: linalg::axis(dim, 0),
        })
    }

    pub fn offset(&self) -> f64 {
        self.r - self.inradius
    }

    pub fn circumradius(&self) -> f64 {
        let a = self.offset();
        (self.r * self.r - a * a).max(0.0).sqrt()
    }

    /// The two generating centers `±a·axis`.
    pub fn centers(&self) -> [Vec<f64>; 2] {
        let a = self.offset();
        [linalg::scale(&self.axis, a), linalg::scale(&self.axis, -a)]
    }

    /// Support value in a direction at angle `phi` to the axis.
    pub fn support_at_angle(&self, phi: f64) -> f64 {
        let a = self.offset();
        let c = phi.cos().abs();
        if c >= a / self.r {
            self.r - a * c
        } else {
            self.circumradius() * phi.sin().abs()
        }
    }

    pub fn switch_angle(&self) -> f64 {
        (self.offset() / self.r).clamp(0.0, 1.0).acos()
    }
}

impl SpindleSpec {
    pub fn new(dim: usize, r: f64, circumradius: f64) -> Result<Self> {
        check_dim_r(dim, r)?;
        if !(circumradius >= 0.0 && circumradius <= r) {
            return Err(Error::OutOfRange {
                what: "spindle circumradius",
                value: circumradius,
            });
        }
        Ok(SpindleSpec {
            dim,
            r,
            circumradius,
            axis: linalg::axis(dim, 0),
        })
    }

    pub fn half_gap(&self) -> f64 {
        let l = self.circumradius;
        (self.r * self.r - l * l).max(0.0).sqrt()
    }

    pub fn inradius(&self) -> f64 {
        self.r - self.half_gap()
    }

    pub fn points(&self) -> [Vec<f64>; 2] {
        let l = self.circumradius;
        [linalg::scale(&self.axis, l), linalg::scale(&self.axis, -l)]
    }

    pub fn support_at_angle(&self, phi: f64) -> f64 {
        let l = self.circumradius;
        let c = phi.cos().abs();
        if c <= l / self.r {
            self.r - self.half_gap() * phi.sin().abs()
        } else {
            l * c
        }
    }

    pub fn switch_angle(&self) -> f64 {
        (self.circumradius / self.r).clamp(0.0, 1.0).acos()
    }
}

/// Mean of a rotation-symmetric, reflection-symmetric support function over the sphere.
fn mean_support<F: Fn(f64) -> f64>(d: usize, h: F, switch: f64, rel_tol: f64) -> f64 {
    if d == 1 {
        return h(0.0);
    }
    let w = |phi: f64| phi.sin().powi(d as i32 - 2);
    let num = integrate(|p| h(p) * w(p), 0.0, switch, rel_tol) + integrate(|p| h(p) * w(p), switch, FRAC_PI_2, rel_tol);
    let den = integrate(w, 0.0, FRAC_PI_2, rel_tol);
    num / den
}

fn ball_profile(d: usize, r: f64) -> Result<IntrinsicProfile> {
    let mut p = IntrinsicProfile::new(d);
    for k in [1, d.saturating_sub(1).max(1), d] {
        p.set(k, intrinsic_ball_constant(d, k)? * r.powi(k as i32), Provenance::Exact);
    }
    p.circumradius = Some(r);
    p.inradius = Some(r);
    Ok(p)
}

pub fn lens_measures(spec: &LensSpec) -> Result<IntrinsicProfile> {
    lens_measures_with(spec, &ToleranceProfile::default())
}

pub fn lens_measures_with(spec: &LensSpec, tol: &ToleranceProfile) -> Result<IntrinsicProfile> {
    let (d, r) = (spec.dim, spec.r);
    let a = spec.offset();
    if a <= 0.0 {
        return ball_profile(d, r);
    }
    let q = tol.quadrature_rel;
    let mut p = IntrinsicProfile::new(d);
    p.set(d, 2.0 * cap_volume_tol(d, r, spec.inradius, q)?, Provenance::Quadrature);
    if d >= 2 {
        let theta = spec.switch_angle();
        p.set(d - 1, cap_lateral_area_tol(d, r, theta, q)?, Provenance::Quadrature);
        let mean_h = mean_support(d, |phi| spec.support_at_angle(phi), theta, q);
        p.set(1, intrinsic_ball_constant(d, 1)? * mean_h, Provenance::Quadrature);
    } else {
        p.set(1, 2.0 * spec.inradius, Provenance::Exact);
    }
    p.circumradius = Some(spec.circumradius());
    p.inradius = Some(spec.inradius);
    Ok(p)
}

pub fn spindle_measures(spec: &SpindleSpec) -> Result<IntrinsicProfile> {
    spindle_measures_with(spec, &ToleranceProfile::default())
}

pub fn spindle_measures_with(spec: &SpindleSpec, tol: &ToleranceProfile) -> Result<IntrinsicProfile> {
    let (d, r, l) = (spec.dim, spec.r, spec.circumradius);
    if l >= r {
        return ball_profile(d, r);
    }
    let mut p = IntrinsicProfile::new(d);
    if l <= 1e-15 * r {
        // the hull of a doubled point is that point
        for k in [1, d.saturating_sub(1).max(1), d] {
            p.set(k, 0.0, Provenance::Exact);
        }
        p.circumradius = Some(0.0);
        p.inradius = Some(0.0);
        return Ok(p);
    }
    p.circumradius = Some(l);
    p.inradius = Some(spec.inradius());
    if d == 1 {
        p.set(1, 2.0 * l, Provenance::Exact);
        return Ok(p);
    }
    let q = tol.quadrature_rel;
    let s = spec.half_gap();
    // profile ρ(t) = sqrt(r² − t²) − s, with t = r sin u
    let u_max = (l / r).asin();
    let rho = |u: f64| (r * u.cos() - s).max(0.0);
    let vol = 2.0 * unit_ball_volume(d - 1) * r * integrate(|u| rho(u).powi(d as i32 - 1) * u.cos(), 0.0, u_max, q);
    p.set(d, vol, Provenance::Quadrature);
    let surf =
        2.0 * (d - 1) as f64 * unit_ball_volume(d - 1) * r * integrate(|u| rho(u).powi(d as i32 - 2), 0.0, u_max, q);
    p.set(d - 1, surf / 2.0, Provenance::Quadrature);
    let mean_h = mean_support(d, |phi| spec.support_at_angle(phi), spec.switch_angle(), q);
    p.set(1, intrinsic_ball_constant(d, 1)? * mean_h, Provenance::Quadrature);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn full_lens_is_ball() {
        for d in 2..7 {
            let p = lens_measures(&LensSpec::new(d, 1.3, 1.3).unwrap()).unwrap();
            assert_relative_eq!(
                p.volume(),
                unit_ball_volume(d) * 1.3f64.powi(d as i32),
                max_relative = 1e-14
            );
            assert_relative_eq!(
                p.get(1).unwrap(),
                intrinsic_ball_constant(d, 1).unwrap() * 1.3,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn planar_lens() {
        let spec = LensSpec::new(2, 2.0, 1.0).unwrap();
        let p = lens_measures(&spec).unwrap();
        assert_relative_eq!(p.volume(), 2.0 * (4.0 * PI / 3.0 - 3f64.sqrt()), max_relative = 1e-12);
        // two arcs, each of half-angle π/3 on a circle of radius 2
        let perimeter = 2.0 * 2.0 * (2.0 * PI / 3.0);
        assert_relative_eq!(p.surface(), perimeter, max_relative = 1e-12);
        // in the plane V_1 from mean width and from the perimeter must agree
        assert_relative_eq!(p.get(1).unwrap(), perimeter / 2.0, max_relative = 1e-10);
        assert_relative_eq!(spec.circumradius(), 3f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn spatial_lens() {
        let p = lens_measures(&LensSpec::new(3, 1.0, 0.5).unwrap()).unwrap();
        assert_relative_eq!(p.volume(), 2.0 * 5.0 * PI / 24.0, max_relative = 1e-12);
        // two zones of height 0.5 on the unit sphere
        assert_relative_eq!(p.surface(), 2.0 * 2.0 * PI * 0.5, max_relative = 1e-12);
    }

    #[test]
    fn planar_spindle() {
        let spec = SpindleSpec::new(2, 2.0, 1.0).unwrap();
        let p = spindle_measures(&spec).unwrap();
        // two disks of radius 2 with centers 2√3 apart
        let dist: f64 = 2.0 * 3f64.sqrt();
        let overlap = 2.0 * 4.0 * (dist / 4.0).acos() - dist / 2.0 * (16.0 - dist * dist).sqrt();
        assert_relative_eq!(p.volume(), overlap, max_relative = 1e-12);
        assert_relative_eq!(p.volume(), 4.0 * PI / 3.0 - 2.0 * 3f64.sqrt(), max_relative = 1e-12);
        // two arcs of angle 2·asin(λ/r) = π/3
        assert_relative_eq!(p.surface(), 2.0 * 2.0 * PI / 3.0, max_relative = 1e-12);
        assert_relative_eq!(p.get(1).unwrap(), p.surface() / 2.0, max_relative = 1e-10);
        assert_relative_eq!(spec.inradius(), 2.0 - 3f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn spatial_spindle_matches_shell_integration() {
        // independent route: V = ∫_{−λ}^{λ} ω_{d−1} ρ(t)^{d−1} dt in the t variable
        let spec = SpindleSpec::new(3, 1.0, 0.6).unwrap();
        let s = spec.half_gap();
        let direct = integrate(|t: f64| PI * ((1.0 - t * t).sqrt() - s).powi(2), -0.6, 0.6, 1e-12);
        assert_relative_eq!(spindle_measures(&spec).unwrap().volume(), direct, max_relative = 1e-10);
    }

    #[test]
    fn spindle_extremes() {
        let ball = spindle_measures(&SpindleSpec::new(4, 1.0, 1.0).unwrap()).unwrap();
        assert_relative_eq!(ball.volume(), PI * PI / 2.0, max_relative = 1e-14);
        let point = spindle_measures(&SpindleSpec::new(3, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!(point.volume(), 0.0);
        assert!(SpindleSpec::new(3, 1.0, 1.5).is_err());
        assert!(LensSpec::new(3, 1.0, 0.0).is_err());
    }

    #[test]
    fn support_branches_are_continuous() {
        for &(r, rho) in &[(1.0, 0.3), (2.0, 1.7), (5.0, 0.01)] {
            let lens = LensSpec::new(3, r, rho).unwrap();
            let a = lens.offset();
            let t = lens.switch_angle();
            let left = r - a * t.cos();
            let right = lens.circumradius() * t.sin();
            assert!((left - right).abs() < 1e-12);
            assert!((left - (r * r - a * a) / r).abs() < 1e-12);

            let sp = SpindleSpec::new(3, r, rho).unwrap();
            let t = sp.switch_angle();
            let left = r - sp.half_gap() * t.sin();
            let right = sp.circumradius * t.cos();
            assert!((left - right).abs() < 1e-12);
            assert!((left - rho * rho / r).abs() < 1e-12);
        }
    }

    #[test]
    fn circumradius_and_inradius_relations() {
        let lens = LensSpec::new(3, 2.0, 0.5).unwrap();
        assert_eq!(lens.inradius + lens.offset(), 2.0);
        assert_relative_eq!(lens.circumradius(), (4.0f64 - 2.25).sqrt(), epsilon = 1e-15);
    }

    proptest! {
        #[test]
        fn volumes_monotone(d in 2usize..6, x in 0.05f64..1.0, y in 0.05f64..1.0) {
            let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
            let l1 = lens_measures(&LensSpec::new(d, 1.0, lo).unwrap()).unwrap().volume();
            let l2 = lens_measures(&LensSpec::new(d, 1.0, hi).unwrap()).unwrap().volume();
            prop_assert!(l1 <= l2 + 1e-12);
            let s1 = spindle_measures(&SpindleSpec::new(d, 1.0, lo).unwrap()).unwrap().volume();
            let s2 = spindle_measures(&SpindleSpec::new(d, 1.0, hi).unwrap()).unwrap().volume();
            prop_assert!(s1 <= s2 + 1e-12);
        }

        #[test]
        fn volume_below_circumball(d in 2usize..7, rho in 0.05f64..1.0) {
            let p = lens_measures(&LensSpec::new(d, 1.0, rho).unwrap()).unwrap();
            prop_assert!(p.volume() <= unit_ball_volume(d) * p.circumradius.unwrap().powi(d as i32) + 1e-12);
        }
    }
}
