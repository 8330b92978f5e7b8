//! Exact intersections of disks in the plane as arc polygons.

use super::optimize::nested_max;
use crate::error::{Error, Result};
use crate::geometry::meb::minimal_enclosing_ball;
use crate::geometry::PointConfig;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

pub type P2 = [f64; 2];

/// Relative tolerance for classifying a region as a single point.
pub const DEGENERACY_EPS: f64 = 1e-9;
/// Arcs shorter than this (radians) are dropped.
pub const MIN_ARC: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionKind {
    Proper,
    FullDisk,
    SinglePoint,
    Empty,
}

/// Boundary arc of the circle `center + radius·(cos t, sin t)`, `t ∈ [start, end]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub center: P2,
    pub radius: f64,
    pub start: f64,
    pub end: f64,
}

impl Arc {
    pub fn angle(&self) -> f64 {
        self.end - self.start
    }

    pub fn point_at(&self, t: f64) -> P2 {
        [
            self.center[0] + self.radius * t.cos(),
            self.center[1] + self.radius * t.sin(),
        ]
    }

    pub fn start_point(&self) -> P2 {
        self.point_at(self.start)
    }

    pub fn end_point(&self) -> P2 {
        self.point_at(self.end)
    }

    /// Does the outward normal direction `phi` occur along this arc?
    pub fn contains_direction(&self, phi: f64) -> bool {
        if self.angle() >= TAU {
            return true;
        }
        (phi - self.start).rem_euclid(TAU) <= self.angle()
    }
}

/// Intersection of finitely many disks; congruent unless built by
/// [`disk_intersection_mixed`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcPolygon {
    pub kind: RegionKind,
    pub r: f64,
    pub vertices: Vec<P2>,
    pub arcs: Vec<Arc>,
    pub generators: Vec<P2>,
    pub radii: Vec<f64>,
    /// Center of a full disk, or the location of a single point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<P2>,
}

pub(crate) fn d2(a: P2, b: P2) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

pub(crate) fn as_p2(p: &[f64]) -> P2 {
    [p[0], p[1]]
}

fn normalize_angle(t: f64) -> f64 {
    let mut x = (t + PI).rem_euclid(TAU) - PI;
    if x >= PI {
        x -= TAU;
    }
    x
}

fn dedup(points: &[P2], radii: &[f64]) -> (Vec<P2>, Vec<f64>) {
    let scale = points.iter().flat_map(|p| p.iter()).fold(1.0f64, |m, x| m.max(x.abs()));
    let tol = 1e-12 * scale;
    let mut pts: Vec<P2> = Vec::new();
    let mut rad: Vec<f64> = Vec::new();
    for (p, &r) in points.iter().zip(radii) {
        match pts.iter().position(|q| d2(*p, *q) <= tol) {
            Some(k) => rad[k] = rad[k].min(r),
            None => {
                pts.push(*p);
                rad.push(r);
            }
        }
    }
    (pts, rad)
}

/// Angular intervals of circle `i` lying in every other disk; `None` means the whole circle.
fn feasible_intervals(i: usize, centers: &[P2], radii: &[f64]) -> Option<Vec<(f64, f64)>> {
    let (ci, ri) = (centers[i], radii[i]);
    let mut cur: Option<Vec<(f64, f64)>> = None;
    for (j, (&cj, &rj)) in centers.iter().zip(radii).enumerate() {
        if j == i {
            continue;
        }
        let dist = d2(ci, cj);
        if dist == 0.0 {
            if ri <= rj {
                continue;
            }
            return Some(vec![]);
        }
        let kappa = (ri * ri + dist * dist - rj * rj) / (2.0 * ri * dist);
        if kappa <= -1.0 {
            continue;
        }
        if kappa >= 1.0 {
            return Some(vec![]);
        }
        let half = kappa.acos();
        let alpha = (cj[1] - ci[1]).atan2(cj[0] - ci[0]);
        let s = alpha - half;
        let w = 2.0 * half;
        cur = Some(match cur {
            None => {
                let s = normalize_angle(s);
                vec![(s, s + w)]
            }
            Some(list) => {
                let mut out = Vec::with_capacity(list.len() + 1);
                for (a, b) in list {
                    // shift the constraint so that its start lies in (a − 2π, a]
                    let k = ((a - s) / TAU).floor();
                    let s0 = s + k * TAU;
                    for shift in [s0, s0 + TAU] {
                        let lo = a.max(shift);
                        let hi = b.min(shift + w);
                        if hi > lo {
                            out.push((lo, hi));
                        }
                    }
                }
                out
            }
        });
        if matches!(&cur, Some(v) if v.is_empty()) {
            return cur;
        }
    }
    cur
}

fn full_disk(center: P2, radius: f64, generators: Vec<P2>, radii: Vec<f64>, r: f64) -> ArcPolygon {
    ArcPolygon {
        kind: RegionKind::FullDisk,
        r,
        vertices: vec![],
        arcs: vec![Arc {
            center,
            radius,
            start: -PI,
            end: PI,
        }],
        generators,
        radii,
        anchor: Some(center),
    }
}

fn single_point(p: P2, generators: Vec<P2>, radii: Vec<f64>, r: f64) -> ArcPolygon {
    ArcPolygon {
        kind: RegionKind::SinglePoint,
        r,
        vertices: vec![p],
        arcs: vec![],
        generators,
        radii,
        anchor: Some(p),
    }
}

fn empty(generators: Vec<P2>, radii: Vec<f64>, r: f64) -> ArcPolygon {
    ArcPolygon {
        kind: RegionKind::Empty,
        r,
        vertices: vec![],
        arcs: vec![],
        generators,
        radii,
        anchor: None,
    }
}

/// Boundary of a region already known to have nonempty interior.
fn assemble(centers: Vec<P2>, radii: Vec<f64>, r: f64, fallback: P2) -> ArcPolygon {
    let mut arcs = Vec::new();
    for i in 0..centers.len() {
        match feasible_intervals(i, &centers, &radii) {
            None => return full_disk(centers[i], radii[i], centers, radii, r),
            Some(list) => {
                for (lo, hi) in list {
                    if hi - lo < MIN_ARC {
                        continue;
                    }
                    let start = normalize_angle(lo);
                    arcs.push(Arc {
                        center: centers[i],
                        radius: radii[i],
                        start,
                        end: start + (hi - lo),
                    });
                }
            }
        }
    }
    if arcs.len() < 2 {
        return single_point(fallback, centers, radii, r);
    }
    arcs.sort_by(|a, b| a.start.total_cmp(&b.start));
    let n = arcs.len();
    let vertices = (0..n)
        .map(|k| {
            let a = arcs[k].start_point();
            let b = arcs[(k + n - 1) % n].end_point();
            [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0]
        })
        .collect();
    ArcPolygon {
        kind: RegionKind::Proper,
        r,
        vertices,
        arcs,
        generators: centers,
        radii,
        anchor: None,
    }
}

/// `∩ B[p, r]` over the given planar points.
pub fn disk_intersection_points(points: &[P2], r: f64) -> ArcPolygon {
    let (centers, radii) = dedup(points, &vec![r; points.len()]);
    match centers.len() {
        0 => return empty(centers, radii, r),
        1 => return full_disk(centers[0], r, centers.clone(), radii, r),
        _ => {}
    }
    let pts: Vec<Vec<f64>> = centers.iter().map(|p| p.to_vec()).collect();
    let meb = minimal_enclosing_ball(&pts, 0).expect("nonempty planar input");
    let eps = DEGENERACY_EPS * r;
    let c = as_p2(&meb.ball.center);
    if meb.ball.radius > r + eps {
        return empty(centers, radii, r);
    }
    if meb.ball.radius >= r - eps {
        return single_point(c, centers, radii, r);
    }
    assemble(centers, radii, r, c)
}

/// `P^r` for a planar configuration.
pub fn disk_intersection(config: &PointConfig) -> Result<ArcPolygon> {
    config.validate()?;
    if config.dim != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: config.dim,
        });
    }
    let pts: Vec<P2> = config.points.iter().map(|p| as_p2(p)).collect();
    Ok(disk_intersection_points(&pts, config.radius))
}

/// Largest `min_i (r_i − |x − c_i|)` over the plane, with its maximizer.
pub fn chebyshev_center(centers: &[P2], radii: &[f64]) -> (P2, f64) {
    // the optimum lies in the smallest disk
    let k = (0..radii.len()).min_by(|&a, &b| radii[a].total_cmp(&radii[b])).unwrap();
    let (c, rk) = (centers[k], radii[k]);
    let f = |x: f64, y: f64| {
        centers
            .iter()
            .zip(radii)
            .map(|(p, &ri)| ri - d2([x, y], *p))
            .fold(f64::INFINITY, f64::min)
    };
    let tol = 1e-14 * (rk + c[0].abs() + c[1].abs());
    let (p, v) = nested_max(f, (c[0] - rk, c[0] + rk), (c[1] - rk, c[1] + rk), tol);
    (p, v)
}

/// `∩ B[c_i, r_i]` with per-disk radii.
pub fn disk_intersection_mixed(centers: &[P2], radii: &[f64]) -> ArcPolygon {
    let (centers, radii) = dedup(centers, radii);
    let rmax = radii.iter().cloned().fold(0.0, f64::max);
    match centers.len() {
        0 => return empty(centers, radii, rmax),
        1 => return full_disk(centers[0], radii[0], centers.clone(), radii, rmax),
        _ => {}
    }
    let (c, depth) = chebyshev_center(&centers, &radii);
    let eps = DEGENERACY_EPS * rmax;
    if depth < -eps {
        return empty(centers, radii, rmax);
    }
    if depth <= eps {
        return single_point(c, centers, radii, rmax);
    }
    assemble(centers, radii, rmax, c)
}
