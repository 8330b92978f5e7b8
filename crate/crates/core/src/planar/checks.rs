//! Support-function checks of planar identities.

use super::hull::{ball_hull_2d, support_2d};
use super::measures::perimeter;
use super::region::{as_p2, disk_intersection, disk_intersection_points, RegionKind, P2};
use crate::error::{Error, Result};
use crate::geometry::meb::minimal_enclosing_ball;
use crate::geometry::PointConfig;
use crate::verify::record::{InstanceKind, InstanceSpec, Side, SuiteRecord, Verdict};
use std::f64::consts::{PI, TAU};

pub const DEFAULT_DIRECTIONS: usize = 360;
pub const IDENTITY_TOL: f64 = 1e-9;

fn instance_of(config: &PointConfig) -> Result<InstanceSpec> {
    let r0 = minimal_enclosing_ball(&config.points, 0)?.ball.radius;
    Ok(InstanceSpec {
        dim: 2,
        count: config.points.len(),
        r0,
        r: config.radius,
        seed: 0,
        kind: InstanceKind::Generic,
    })
}

fn directions(n: usize) -> impl Iterator<Item = P2> {
    (0..n).map(move |k| {
        let t = TAU * k as f64 / n as f64;
        [t.cos(), t.sin()]
    })
}

fn identity_record(instance: InstanceSpec, deviation: f64, tol: f64) -> SuiteRecord {
    let verdict = if deviation <= tol { Verdict::Pass } else { Verdict::Fail };
    SuiteRecord::new(instance, Side::exact(deviation), Side::exact(tol), 0.0, verdict)
}

/// Compares the support function of the disk intersection centered at the
/// half pairwise differences with `(h_{Q^r}(u) + h_{Q^r}(−u)) / 2`.
pub fn check_symmetral_2d(q: &PointConfig, n_dirs: usize, tol: f64) -> Result<SuiteRecord> {
    let poly = disk_intersection(q)?;
    if poly.kind != RegionKind::Proper {
        return Err(Error::Degenerate(format!(
            "Q^r is {:?}, not a proper region",
            poly.kind
        )));
    }
    let pts: Vec<P2> = q.points.iter().map(|p| as_p2(p)).collect();
    let mut centers = Vec::with_capacity(pts.len() * pts.len());
    for a in &pts {
        for b in &pts {
            centers.push([(a[0] - b[0]) / 2.0, (a[1] - b[1]) / 2.0]);
        }
    }
    let sym = disk_intersection_points(&centers, q.radius);
    let mut worst = (0.0f64, [1.0, 0.0]);
    let mut excess = f64::NEG_INFINITY;
    for u in directions(n_dirs) {
        let lhs = support_2d(&sym, u)?.0;
        let rhs = 0.5 * (support_2d(&poly, u)?.0 + support_2d(&poly, [-u[0], -u[1]])?.0);
        excess = excess.max(rhs - lhs);
        if (lhs - rhs).abs() > worst.0 {
            worst = ((lhs - rhs).abs(), u);
        }
    }
    let mut rec = identity_record(instance_of(q)?, worst.0, tol)
        .detail("max_deviation", worst.0)
        .detail("symmetral_excess", excess);
    if rec.verdict == Verdict::Fail {
        rec.witnesses.push(worst.1.to_vec());
        rec = rec.with_note("support of the symmetral differs from the pair-difference intersection");
    }
    Ok(rec)
}

/// Checks `h_{conv_r P}(u) + h_{P^r}(−u) = r` and the perimeter sum `2πr`.
pub fn check_minkowski_identity_2d(p: &PointConfig, n_dirs: usize, tol: f64) -> Result<SuiteRecord> {
    let poly = disk_intersection(p)?;
    if matches!(poly.kind, RegionKind::Empty | RegionKind::SinglePoint) {
        return Err(Error::Degenerate(format!("P^r is {:?}", poly.kind)));
    }
    let hull = ball_hull_2d(p)?;
    let r = p.radius;
    let mut worst = (0.0f64, [1.0, 0.0]);
    for u in directions(n_dirs) {
        let s = support_2d(&hull, u)?.0 + support_2d(&poly, [-u[0], -u[1]])?.0;
        if (s - r).abs() > worst.0 {
            worst = ((s - r).abs(), u);
        }
    }
    let per = perimeter(&hull) + perimeter(&poly);
    let per_dev = (per - 2.0 * PI * r).abs();
    let deviation = worst.0.max(per_dev);
    let mut rec = identity_record(instance_of(p)?, deviation, tol)
        .detail("support_deviation", worst.0)
        .detail("perimeter_sum", per)
        .detail("perimeter_deviation", per_dev);
    if rec.verdict == Verdict::Fail {
        rec.witnesses.push(worst.1.to_vec());
    }
    Ok(rec)
}
