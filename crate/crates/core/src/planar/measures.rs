use super::optimize::nested_min;
use super::region::{chebyshev_center, d2, ArcPolygon, RegionKind, P2};
use crate::error::{Error, Result};
use crate::geometry::meb::minimal_enclosing_ball;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanarMeasures {
    pub area: f64,
    pub perimeter: f64,
    pub inradius: f64,
    pub incenter: P2,
    /// Inradius from the direct maximization of `min_i (r_i − |x − p_i|)`.
    pub inradius_direct: f64,
    pub circumradius: f64,
    pub circumcenter: P2,
}

impl PlanarMeasures {
    /// `V_1 = perimeter / 2`.
    pub fn v1(&self) -> f64 {
        self.perimeter / 2.0
    }
}

pub fn area(ap: &ArcPolygon) -> f64 {
    match ap.kind {
        RegionKind::Empty | RegionKind::SinglePoint => 0.0,
        RegionKind::FullDisk => PI * ap.arcs[0].radius.powi(2),
        RegionKind::Proper => {
            let n = ap.vertices.len();
            let shoelace: f64 = (0..n)
                .map(|k| {
                    let (a, b) = (ap.vertices[k], ap.vertices[(k + 1) % n]);
                    a[0] * b[1] - a[1] * b[0]
                })
                .sum::<f64>()
                / 2.0;
            let segments: f64 = ap
                .arcs
                .iter()
                .map(|a| a.radius.powi(2) / 2.0 * (a.angle() - a.angle().sin()))
                .sum();
            shoelace + segments
        }
    }
}

pub fn perimeter(ap: &ArcPolygon) -> f64 {
    match ap.kind {
        RegionKind::Empty | RegionKind::SinglePoint => 0.0,
        _ => ap.arcs.iter().map(|a| a.radius * a.angle()).sum(),
    }
}

/// Farthest distance from `c` to the boundary arcs.
pub fn farthest_distance(ap: &ArcPolygon, c: P2) -> f64 {
    let mut best = ap.vertices.iter().map(|v| d2(*v, c)).fold(0.0, f64::max);
    for arc in &ap.arcs {
        let away = [arc.center[0] - c[0], arc.center[1] - c[1]];
        let phi = away[1].atan2(away[0]);
        let far = if (away[0] != 0.0 || away[1] != 0.0) && arc.contains_direction(phi) {
            d2(arc.center, c) + arc.radius
        } else if away == [0.0, 0.0] {
            arc.radius
        } else {
            d2(arc.start_point(), c).max(d2(arc.end_point(), c))
        };
        best = best.max(far);
    }
    best
}

/// Bounding box of a nonempty region.
pub fn bounding_box(ap: &ArcPolygon) -> (P2, P2) {
    let axes = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
    let h: Vec<f64> = axes
        .iter()
        .map(|u| super::hull::support_2d(ap, *u).map(|s| s.0).unwrap_or(0.0))
        .collect();
    ([-h[2], -h[3]], [h[0], h[1]])
}

pub fn measures(ap: &ArcPolygon) -> Result<PlanarMeasures> {
    match ap.kind {
        RegionKind::Empty => return Err(Error::Degenerate("empty region has no measures".into())),
        RegionKind::SinglePoint => return Err(Error::Degenerate("single-point region has no measures".into())),
        RegionKind::FullDisk => {
            let arc = &ap.arcs[0];
            return Ok(PlanarMeasures {
                area: area(ap),
                perimeter: perimeter(ap),
                inradius: arc.radius,
                incenter: arc.center,
                inradius_direct: arc.radius,
                circumradius: arc.radius,
                circumcenter: arc.center,
            });
        }
        RegionKind::Proper => {}
    }
    let (direct_center, direct) = chebyshev_center(&ap.generators, &ap.radii);
    let congruent = ap.radii.iter().all(|&x| x == ap.r);
    let (incenter, inradius) = if congruent {
        let pts: Vec<Vec<f64>> = ap.generators.iter().map(|p| p.to_vec()).collect();
        let meb = minimal_enclosing_ball(&pts, 0)?;
        ([meb.ball.center[0], meb.ball.center[1]], ap.r - meb.ball.radius)
    } else {
        (direct_center, direct)
    };
    let (lo, hi) = bounding_box(ap);
    let tol = 1e-14 * (1.0 + hi[0].abs().max(lo[0].abs()) + hi[1].abs().max(lo[1].abs()));
    let (circumcenter, circumradius) = nested_min(
        |x, y| farthest_distance(ap, [x, y]),
        (lo[0], hi[0]),
        (lo[1], hi[1]),
        tol,
    );
    Ok(PlanarMeasures {
        area: area(ap),
        perimeter: perimeter(ap),
        inradius,
        incenter,
        inradius_direct: direct,
        circumradius,
        circumcenter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::region::{disk_intersection_mixed, disk_intersection_points};
    use approx::assert_relative_eq;

    #[test]
    fn full_disk_measures() {
        let m = measures(&disk_intersection_points(&[[1.0, 1.0]], 2.0)).unwrap();
        assert_relative_eq!(m.area, 4.0 * PI, max_relative = 1e-15);
        assert_relative_eq!(m.perimeter, 4.0 * PI, max_relative = 1e-15);
        assert_eq!(m.inradius, 2.0);
        assert_eq!(m.circumradius, 2.0);
    }

    #[test]
    fn lens_measures_match_closed_forms() {
        let m = measures(&disk_intersection_points(&[[-1.0, 0.0], [1.0, 0.0]], 2.0)).unwrap();
        assert_relative_eq!(m.area, 2.0 * (4.0 * PI / 3.0 - 3f64.sqrt()), max_relative = 1e-13);
        assert_relative_eq!(m.inradius, 1.0, epsilon = 1e-15);
        assert_relative_eq!(m.inradius_direct, 1.0, epsilon = 1e-12);
        assert_relative_eq!(m.circumradius, 3f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(m.perimeter, 8.0 * PI / 3.0, max_relative = 1e-13);
    }

    #[test]
    fn area_matches_grid_count() {
        let pts = [[0.2, 0.1], [-0.3, 0.4], [0.1, -0.5], [0.4, 0.4]];
        let r = 1.2;
        let m = measures(&disk_intersection_points(&pts, r)).unwrap();
        // midpoint-rule oracle on a fine grid
        let n = 1500;
        let h = 4.0 / n as f64;
        let mut count = 0usize;
        for i in 0..n {
            for j in 0..n {
                let x = [-2.0 + (i as f64 + 0.5) * h, -2.0 + (j as f64 + 0.5) * h];
                if pts.iter().all(|p| d2(x, *p) <= r) {
                    count += 1;
                }
            }
        }
        assert_relative_eq!(m.area, count as f64 * h * h, max_relative = 2e-3);
    }

    #[test]
    fn mixed_radius_inradius() {
        // disk of radius 1 centered at 1.5 cut by the disk of radius 2 at the origin:
        // along the axis the region spans [0.5, 2], so the inradius is 0.75
        let ap = disk_intersection_mixed(&[[0.0, 0.0], [1.5, 0.0]], &[2.0, 1.0]);
        let m = measures(&ap).unwrap();
        assert_relative_eq!(m.inradius, 0.75, epsilon = 1e-12);
    }

    #[test]
    fn inradius_routes_agree_and_circumradius_is_bounded() {
        use rand::Rng;
        let mut rng = crate::rng::stream(3, 0);
        for _ in 0..200 {
            let n = rng.random_range(2..=10);
            let pts: Vec<P2> = (0..n)
                .map(|_| [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)])
                .collect();
            let v: Vec<Vec<f64>> = pts.iter().map(|p| p.to_vec()).collect();
            let r0 = minimal_enclosing_ball(&v, 0).unwrap().ball.radius;
            let r = r0 * rng.random_range(1.1..5.0);
            let m = measures(&disk_intersection_points(&pts, r)).unwrap();
            assert!(
                (m.inradius - m.inradius_direct).abs() < 1e-9,
                "{} {}",
                m.inradius,
                m.inradius_direct
            );
            assert!(m.circumradius <= (r * r - r0 * r0).sqrt() + 1e-9);
            assert!(m.inradius <= m.circumradius);
            assert!(m.area <= PI * m.circumradius.powi(2));
        }
    }
}
