//! Coverings of a disk by ball bodies of radii `r_i ≤ r`, and the inradius
//! sum `Σ r_in(C_i ∩ B) ≥ r`.
//!
//! Pieces come from partitions of `B = B[o, r]` (Voronoi cells of random
//! sites, or parallel strips). Each piece `V ∩ B` is replaced by the
//! `r_i`-ball hull of its corners plus points along its boundary arc, spaced
//! at most `π/4` apart: the hull contains the corners' convex hull and every
//! short arc of `B` between consecutive points, hence the whole piece.

use super::record::{InstanceKind, InstanceSpec, Side, SuiteRecord, Verdict};
use crate::error::{Error, Result};
use crate::geometry::meb::minimal_enclosing_ball;
use crate::geometry::PointConfig;
use crate::planar::{self, contains_2d, Containment, P2};
use crate::rng;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_4, PI, TAU};

pub const KADETS_TOL: f64 = 1e-6;
const MAX_REGENERATIONS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Partition {
    Voronoi,
    Strips,
}

/// One covering piece: generators of `C_i` as an `r_i`-ball hull.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Piece {
    pub radius: f64,
    pub points: Vec<P2>,
    /// Inradius of `C_i ∩ B`.
    pub inradius: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Covering {
    pub r: f64,
    pub pieces: Vec<Piece>,
    pub partition: Partition,
    pub test_points: usize,
}

impl Covering {
    pub fn inradius_sum(&self) -> f64 {
        self.pieces.iter().map(|p| p.inradius).sum()
    }
}

type HalfPlane = (P2, f64); // ⟨a, x⟩ ≤ b

fn clip(poly: &[P2], (a, b): HalfPlane) -> Vec<P2> {
    let side = |p: &P2| a[0] * p[0] + a[1] * p[1] - b;
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let (sp, sq) = (side(&p), side(&q));
        if sp <= 0.0 {
            out.push(p);
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            let t = sp / (sp - sq);
            out.push([p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]);
        }
    }
    out
}

fn inside_poly(poly: &[P2], y: P2) -> bool {
    (0..poly.len()).all(|i| {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        (q[0] - p[0]) * (y[1] - p[1]) - (q[1] - p[1]) * (y[0] - p[0]) >= -1e-12
    })
}

/// Points of `poly ∩ B[o, r]` whose `ρ`-ball hull contains it, for `ρ ≤ r`.
fn piece_points(halfplanes: &[HalfPlane], r: f64) -> Vec<P2> {
    let big = 4.0 * r;
    let mut poly = vec![[-big, -big], [big, -big], [big, big], [-big, big]];
    for &h in halfplanes {
        poly = clip(&poly, h);
        if poly.is_empty() {
            return vec![];
        }
    }
    let mut pts: Vec<P2> = poly.iter().copied().filter(|p| p[0].hypot(p[1]) <= r).collect();
    // crossings of the polygon boundary with the circle
    let mut angles = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let d = [q[0] - p[0], q[1] - p[1]];
        let (a, b, c) = (
            d[0] * d[0] + d[1] * d[1],
            2.0 * (p[0] * d[0] + p[1] * d[1]),
            p[0] * p[0] + p[1] * p[1] - r * r,
        );
        let disc = b * b - 4.0 * a * c;
        if a == 0.0 || disc < 0.0 {
            continue;
        }
        for t in [(-b - disc.sqrt()) / (2.0 * a), (-b + disc.sqrt()) / (2.0 * a)] {
            if (0.0..=1.0).contains(&t) {
                let x = [p[0] + t * d[0], p[1] + t * d[1]];
                angles.push(x[1].atan2(x[0]).rem_euclid(TAU));
            }
        }
    }
    angles.sort_by(f64::total_cmp);
    let on_circle = |t: f64| [r * t.cos(), r * t.sin()];
    let add_arc = |from: f64, to: f64, pts: &mut Vec<P2>| {
        let steps = ((to - from) / FRAC_PI_4).ceil().max(1.0) as usize;
        for s in 0..=steps {
            pts.push(on_circle(from + (to - from) * s as f64 / steps as f64));
        }
    };
    if angles.is_empty() {
        if inside_poly(&poly, [r, 0.0]) {
            add_arc(0.0, TAU, &mut pts);
        }
        return pts;
    }
    for i in 0..angles.len() {
        let from = angles[i];
        let to = if i + 1 < angles.len() {
            angles[i + 1]
        } else {
            angles[0] + TAU
        };
        if to - from < 1e-15 {
            continue;
        }
        if inside_poly(&poly, on_circle(0.5 * (from + to))) {
            add_arc(from, to, &mut pts);
        }
    }
    pts
}

fn partition(kind: Partition, n: usize, r: f64, g: &mut impl Rng) -> Vec<Vec<HalfPlane>> {
    match kind {
        Partition::Voronoi => {
            let sites: Vec<P2> = (0..n)
                .map(|_| {
                    let v = rng::in_unit_ball(g, 2);
                    [r * v[0], r * v[1]]
                })
                .collect();
            (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|&j| j != i)
                        .map(|j| {
                            let (a, b) = (sites[i], sites[j]);
                            // |x − a| ≤ |x − b|  ⇔  ⟨b − a, x⟩ ≤ (|b|² − |a|²)/2
                            (
                                [b[0] - a[0], b[1] - a[1]],
                                0.5 * (b[0] * b[0] + b[1] * b[1] - a[0] * a[0] - a[1] * a[1]),
                            )
                        })
                        .collect()
                })
                .collect()
        }
        Partition::Strips => {
            let t = g.random_range(0.0..PI);
            let u = [t.cos(), t.sin()];
            let mut cuts: Vec<f64> = (0..n - 1).map(|_| g.random_range(-r..r)).collect();
            cuts.sort_by(f64::total_cmp);
            (0..n)
                .map(|i| {
                    let mut h = Vec::new();
                    if i > 0 {
                        h.push(([-u[0], -u[1]], -cuts[i - 1]));
                    }
                    if i + 1 < n {
                        h.push((u, cuts[i]));
                    }
                    h
                })
                .collect()
        }
    }
}

fn build_piece(points: Vec<P2>, radius: f64, r: f64) -> Result<(Piece, planar::ArcPolygon)> {
    let cfg = PointConfig::new(2, radius, points.iter().map(|p| p.to_vec()).collect())?;
    let hull = planar::ball_hull_2d(&cfg)?;
    let mut centers = hull.generators.clone();
    let mut radii = hull.radii.clone();
    centers.push([0.0, 0.0]);
    radii.push(r);
    let cap = planar::disk_intersection_mixed(&centers, &radii);
    let inradius = planar::measures(&cap)?.inradius_direct;
    Ok((
        Piece {
            radius,
            points,
            inradius,
        },
        hull,
    ))
}

fn covered(hulls: &[planar::ArcPolygon], y: P2, eps: f64) -> bool {
    hulls.iter().any(|h| contains_2d(h, y, eps) != Containment::Outside)
}

/// A certified covering of `B[o, r]` by `n` pieces with radii drawn from `[r_min_ratio · r, r]`.
pub fn gen_covering(n: usize, r: f64, kind: Partition, r_min_ratio: f64, seed: u64) -> Result<Covering> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "piece count",
            value: 0.0,
        });
    }
    if n == 1 {
        let disk: Vec<P2> = (0..8)
            .map(|k| [r * (k as f64 * FRAC_PI_4).cos(), r * (k as f64 * FRAC_PI_4).sin()])
            .collect();
        let piece = Piece {
            radius: r,
            points: disk,
            inradius: r,
        };
        return Ok(Covering {
            r,
            pieces: vec![piece],
            partition: kind,
            test_points: 0,
        });
    }
    'attempt: for attempt in 0..MAX_REGENERATIONS as u64 {
        let mut g = rng::stream(seed, attempt);
        let mut pieces = Vec::new();
        let mut hulls = Vec::new();
        for halfplanes in partition(kind, n, r, &mut g) {
            let pts = piece_points(&halfplanes, r);
            if pts.len() < 2 {
                continue 'attempt;
            }
            let vecs: Vec<Vec<f64>> = pts.iter().map(|p| p.to_vec()).collect();
            let spread = minimal_enclosing_ball(&vecs, 0)?.ball.radius;
            if spread >= r * (1.0 - 1e-9) {
                // only B itself is an r-ball body containing this piece
                pieces.push(Piece {
                    radius: r,
                    points: pts,
                    inradius: r,
                });
                hulls.push(planar::disk_intersection_points(&[[0.0, 0.0]], r));
                continue;
            }
            let lo = (r_min_ratio * r).max(spread * (1.0 + 1e-3)).min(r);
            let radius = if lo < r { g.random_range(lo..=r) } else { r };
            let (piece, hull) = build_piece(pts, radius, r)?;
            pieces.push(piece);
            hulls.push(hull);
        }
        // grid plus random points of B, each must be covered
        let eps = 1e-9 * r;
        let steps = 80;
        let mut tests = 0;
        for i in 0..=steps {
            for j in 0..=steps {
                let y = [
                    r * (2.0 * i as f64 / steps as f64 - 1.0),
                    r * (2.0 * j as f64 / steps as f64 - 1.0),
                ];
                if y[0].hypot(y[1]) <= r {
                    tests += 1;
                    if !covered(&hulls, y, eps) {
                        continue 'attempt;
                    }
                }
            }
        }
        for _ in 0..5000 {
            let v = rng::in_unit_ball(&mut g, 2);
            tests += 1;
            if !covered(&hulls, [r * v[0], r * v[1]], eps) {
                continue 'attempt;
            }
        }
        return Ok(Covering {
            r,
            pieces,
            partition: kind,
            test_points: tests,
        });
    }
    Err(Error::GenerationFailed {
        what: "disk covering",
        attempts: MAX_REGENERATIONS,
    })
}

/// `r ≤ Σ r_in(C_i ∩ B)` on a generated covering.
pub fn check_kadets(r: f64, n: usize, seed: u64) -> Result<SuiteRecord> {
    let kind = if seed.is_multiple_of(2) {
        Partition::Voronoi
    } else {
        Partition::Strips
    };
    let cov = gen_covering(n, r, kind, 0.5, seed)?;
    let sum = cov.inradius_sum();
    let v = if sum - r >= -KADETS_TOL {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let instance = InstanceSpec {
        dim: 2,
        count: n,
        r0: r,
        r,
        seed,
        kind: InstanceKind::Covering,
    };
    let min_radius = cov.pieces.iter().map(|p| p.radius).fold(f64::INFINITY, f64::min);
    Ok(SuiteRecord::new(instance, Side::exact(r), Side::exact(sum), 0.0, v)
        .detail("strips", (kind == Partition::Strips) as u8 as f64)
        .detail("min_piece_radius", min_radius)
        .detail("test_points", cov.test_points as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_piece_is_equality() {
        let rec = check_kadets(1.5, 1, 0).unwrap();
        assert_eq!(rec.margin, 0.0);
        assert_eq!(rec.verdict, Verdict::Pass);
    }

    #[test]
    fn strip_pieces_contain_their_strips() {
        let hp = vec![([1.0, 0.0], 0.3), ([-1.0, 0.0], 0.2)];
        let pts = piece_points(&hp, 1.0);
        let (_, hull) = build_piece(pts, 1.0, 1.0).unwrap();
        let mut g = rng::stream(1, 0);
        for _ in 0..2000 {
            let v = rng::in_unit_ball(&mut g, 2);
            if (-0.2..=0.3).contains(&v[0]) {
                assert_ne!(contains_2d(&hull, [v[0], v[1]], 1e-12), Containment::Outside);
            }
        }
    }

    #[test]
    fn half_disks() {
        let hp = vec![([1.0, 0.0], 0.0)];
        let pts = piece_points(&hp, 1.0);
        assert!(pts.len() >= 5);
        assert!(pts.iter().all(|p| p[0] <= 1e-12 && p[0].hypot(p[1]) <= 1.0 + 1e-12));
    }

    #[test]
    fn random_coverings_satisfy_the_bound() {
        for seed in 0..12 {
            for n in [2, 3, 4] {
                let rec = check_kadets(1.0, n, seed).unwrap();
                assert_eq!(rec.verdict, Verdict::Pass, "{rec:?}");
            }
        }
    }
}
