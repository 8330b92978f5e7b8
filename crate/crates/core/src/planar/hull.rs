//! Support functions, membership, nearest points and the r-ball hull in the plane.

use super::region::{as_p2, d2, disk_intersection_points, ArcPolygon, RegionKind, P2};
use crate::error::{Error, Result};
use crate::geometry::meb::minimal_enclosing_ball;
use crate::geometry::PointConfig;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// `h(u) = max ⟨x, u⟩` over the region, with a maximizer.
pub fn support_2d(ap: &ArcPolygon, u: P2) -> Result<(f64, P2)> {
    let dot = |p: P2| p[0] * u[0] + p[1] * u[1];
    match ap.kind {
        RegionKind::Empty => return Err(Error::Degenerate("support of an empty region".into())),
        RegionKind::SinglePoint => {
            let p = ap.anchor.expect("single point has an anchor");
            return Ok((dot(p), p));
        }
        _ => {}
    }
    let norm = (u[0] * u[0] + u[1] * u[1]).sqrt();
    let phi = u[1].atan2(u[0]);
    let mut best = (f64::NEG_INFINITY, [0.0, 0.0]);
    for v in &ap.vertices {
        if dot(*v) > best.0 {
            best = (dot(*v), *v);
        }
    }
    for arc in &ap.arcs {
        if arc.contains_direction(phi) {
            let v = dot(arc.center) + arc.radius * norm;
            if v > best.0 {
                best = (v, arc.point_at(phi));
            }
        }
    }
    Ok(best)
}

pub fn contains_2d(ap: &ArcPolygon, y: P2, eps: f64) -> Containment {
    match ap.kind {
        RegionKind::Empty => Containment::Outside,
        RegionKind::SinglePoint => {
            if d2(ap.anchor.unwrap(), y) <= eps {
                Containment::Boundary
            } else {
                Containment::Outside
            }
        }
        _ => {
            let mut on_boundary = false;
            for (p, &r) in ap.generators.iter().zip(&ap.radii) {
                let dd = d2(*p, y);
                if dd > r + eps {
                    return Containment::Outside;
                }
                if dd >= r - eps {
                    on_boundary = true;
                }
            }
            if on_boundary {
                Containment::Boundary
            } else {
                Containment::Inside
            }
        }
    }
}

/// Euclidean projection of `y` onto the region.
pub fn nearest_point_2d(ap: &ArcPolygon, y: P2) -> Result<P2> {
    match ap.kind {
        RegionKind::Empty => return Err(Error::Degenerate("projection onto an empty region".into())),
        RegionKind::SinglePoint => return Ok(ap.anchor.unwrap()),
        _ => {}
    }
    if ap.generators.iter().zip(&ap.radii).all(|(p, &r)| d2(*p, y) <= r) {
        return Ok(y);
    }
    let mut best = (f64::INFINITY, y);
    let mut consider = |p: P2| {
        let dd = d2(p, y);
        if dd < best.0 {
            best = (dd, p);
        }
    };
    for v in &ap.vertices {
        consider(*v);
    }
    for arc in &ap.arcs {
        let dir = [y[0] - arc.center[0], y[1] - arc.center[1]];
        if dir != [0.0, 0.0] {
            let phi = dir[1].atan2(dir[0]);
            if arc.contains_direction(phi) {
                consider(arc.point_at(phi));
            }
        }
    }
    Ok(best.1)
}

/// `conv_r P` for planar `P`, obtained as `(P^r)^r`.
pub fn ball_hull_2d(config: &PointConfig) -> Result<ArcPolygon> {
    let poly = super::region::disk_intersection(config)?;
    let r = config.radius;
    Ok(match poly.kind {
        RegionKind::Empty => poly,
        RegionKind::FullDisk => {
            let p = poly.anchor.unwrap();
            ArcPolygon {
                kind: RegionKind::SinglePoint,
                r,
                vertices: vec![p],
                arcs: vec![],
                generators: vec![],
                radii: vec![],
                anchor: Some(p),
            }
        }
        RegionKind::SinglePoint => disk_intersection_points(&[poly.anchor.unwrap()], r),
        RegionKind::Proper => disk_intersection_points(&poly.vertices, r),
    })
}

/// Circumcenter of a planar configuration.
pub fn circumcenter_2d(config: &PointConfig) -> Result<(P2, f64)> {
    let eb = minimal_enclosing_ball(&config.points, 0)?;
    Ok((as_p2(&eb.ball.center), eb.ball.radius))
}
