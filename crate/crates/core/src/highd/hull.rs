//! Outer approximation of the r-ball hull and one-sided hull membership.
//!
//! `conv_r P = ∩_{c ∈ P^r} B[c, r]`, so any finite set of centers in `P^r`
//! yields a superset of the hull. The ball `B[o, r0]` about the circumcenter
//! is itself such an intersection (its centers form `B[o, r − r0] ⊆ P^r`) and
//! is always included.

use super::body::Body;
use super::directions::directions;
use super::estimate::Estimate;
use super::mc::ball_blocks;
use super::support::support_body;
use crate::error::Result;
use crate::geometry::constants::unit_ball_volume;
use crate::geometry::PointConfig;
use crate::linalg;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OuterHullApprox {
    pub base: PointConfig,
    pub centers: Vec<Vec<f64>>,
    pub directions: Vec<Vec<f64>>,
    /// `max_i |c_j − p_i| − r` for each center (≤ 0 up to rounding).
    pub witness_excess: Vec<f64>,
    pub bound_center: Vec<f64>,
    pub bound_radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudyRow {
    pub m: usize,
    pub volume: Estimate,
    /// Paired estimate of `vol(m_prev) − vol(m)` (nonnegative by nesting).
    pub decrease: Option<Estimate>,
}

pub fn hull_outer_approx_body(body: &Body, config: &PointConfig, m: usize, seed: u64) -> Result<OuterHullApprox> {
    body.require_nonempty()?;
    let dirs = directions(body.dim, m, seed);
    let mut centers = Vec::with_capacity(m);
    let mut excess = Vec::with_capacity(m);
    for u in &dirs {
        let s = support_body(body, u, 1e-9)?;
        excess.push(body.violation(&s.point));
        centers.push(s.point);
    }
    Ok(OuterHullApprox {
        base: config.clone(),
        centers,
        directions: dirs,
        witness_excess: excess,
        bound_center: body.center().to_vec(),
        bound_radius: body.r0(),
    })
}

pub fn hull_outer_approx(config: &PointConfig, m: usize, seed: u64) -> Result<OuterHullApprox> {
    let body = Body::new(config)?;
    hull_outer_approx_body(&body, config, m, seed)
}

impl OuterHullApprox {
    /// Index of the first center whose ball misses `y` (or `centers.len()`).
    pub fn first_violation(&self, y: &[f64]) -> usize {
        let lim = self.base.radius * self.base.radius;
        self.centers
            .iter()
            .position(|c| linalg::dist2(c, y) > lim)
            .unwrap_or(self.centers.len())
    }

    /// Is `y` in the region induced by the first `m` centers?
    pub fn contains(&self, y: &[f64], m: usize) -> bool {
        linalg::dist(y, &self.bound_center) <= self.bound_radius && self.first_violation(y) >= m.min(self.centers.len())
    }

    /// Volumes for each prefix length in `ms` (ascending), from one common sample set.
    pub fn volume_study(&self, ms: &[usize], samples: usize, seed: u64) -> Vec<StudyRow> {
        let dim = self.bound_center.len();
        let k = ms.len();
        // counts[j] = samples inside the region for ms[j]; disagree[j] between ms[j-1] and ms[j]
        let per_block = ball_blocks(
            &self.bound_center,
            self.bound_radius,
            samples,
            seed,
            || vec![0u64; k],
            |acc, x| {
                let f = self.first_violation(x);
                for (j, &m) in ms.iter().enumerate() {
                    if f >= m.min(self.centers.len()) {
                        acc[j] += 1;
                    }
                }
            },
        );
        let mut counts = vec![0u64; k];
        for b in per_block {
            for j in 0..k {
                counts[j] += b[j];
            }
        }
        let scale = unit_ball_volume(dim) * self.bound_radius.powi(dim as i32);
        let n = samples as u64;
        (0..k)
            .map(|j| StudyRow {
                m: ms[j],
                volume: Estimate::from_hits(counts[j], n, scale, seed, "outer-hull"),
                // nested regions: the difference indicator is itself a hit indicator
                decrease: (j > 0)
                    .then(|| Estimate::from_hits(counts[j - 1] - counts[j], n, scale, seed, "outer-hull-decrease")),
            })
            .collect()
    }

    pub fn volume(&self, samples: usize, seed: u64) -> Estimate {
        self.volume_study(&[self.centers.len()], samples, seed).remove(0).volume
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum HullMembership {
    /// A center in `P^r` farther than `r` from `y` certifies `y ∉ conv_r P`.
    Outside { witness: Vec<f64>, distance: f64 },
    /// No witness found; membership is not proven.
    InsideUnrefuted { best_distance: f64 },
}

/// Searches for `c ∈ P^r` with `|c − y| > r` by multi-start farthest-point ascent.
pub fn hull_membership(body: &Body, y: &[f64], starts: usize, seed: u64, tol: f64) -> Result<HullMembership> {
    body.require_nonempty()?;
    let mut dirs = directions(body.dim, starts, seed);
    if let Some(u) = linalg::normalized(&linalg::sub(body.center(), y)) {
        dirs.insert(0, u);
    }
    let mut best = (f64::NEG_INFINITY, body.center().to_vec());
    for u in dirs {
        let mut c = support_body(body, &u, tol)?.point;
        let mut dist = linalg::dist(&c, y);
        for _ in 0..200 {
            let g = match linalg::normalized(&linalg::sub(&c, y)) {
                Some(g) => g,
                None => break,
            };
            let next = support_body(body, &g, tol)?.point;
            let nd = linalg::dist(&next, y);
            if nd <= dist + 1e-14 * (1.0 + dist) {
                break;
            }
            c = next;
            dist = nd;
        }
        if dist > best.0 {
            best = (dist, c);
        }
        if best.0 > body.r + tol {
            return Ok(HullMembership::Outside {
                witness: best.1,
                distance: best.0,
            });
        }
    }
    Ok(HullMembership::InsideUnrefuted { best_distance: best.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{spindle_measures, SpindleSpec};
    use crate::planar;

    #[test]
    fn two_point_hull_converges_to_spindle_from_above() {
        let cfg = PointConfig::new(2, 2.0, vec![vec![-1.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let approx = hull_outer_approx(&cfg, 256, 1).unwrap();
        assert!(approx.witness_excess.iter().all(|&e| e <= 1e-9));
        let rows = approx.volume_study(&[4, 16, 64, 256], 200_000, 2);
        let exact = spindle_measures(&SpindleSpec::new(2, 2.0, 1.0).unwrap())
            .unwrap()
            .volume();
        for w in rows.windows(2) {
            assert!(w[1].volume.value <= w[0].volume.value);
        }
        let last = &rows.last().unwrap().volume;
        assert!(last.value >= exact - 4.0 * last.stderr);
        assert!(last.value - exact < 0.01, "{} vs {exact}", last.value);
    }

    #[test]
    fn outer_region_contains_planar_hull() {
        let pts = vec![vec![0.2, 0.1], vec![-0.3, 0.4], vec![0.1, -0.5], vec![0.4, 0.4]];
        let cfg = PointConfig::new(2, 1.2, pts).unwrap();
        let approx = hull_outer_approx(&cfg, 64, 3).unwrap();
        let hull = planar::ball_hull_2d(&cfg).unwrap();
        for v in &hull.vertices {
            assert!(approx.centers.iter().all(|c| linalg::dist(c, v) <= 1.2 + 1e-9));
        }
    }

    #[test]
    fn one_sided_membership() {
        let cfg = PointConfig::new(3, 2.0, vec![vec![-1.0, 0.0, 0.0], vec![1.0, 0.0, 0.0]]).unwrap();
        let body = Body::new(&cfg).unwrap();
        // the spindle's waist has radius r − sqrt(r² − 1) = 2 − √3
        match hull_membership(&body, &[0.0, 0.5, 0.0], 16, 1, 1e-9).unwrap() {
            HullMembership::Outside { distance, .. } => assert!(distance > 2.0),
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(matches!(
            hull_membership(&body, &[0.0, 0.1, 0.0], 16, 1, 1e-9).unwrap(),
            HullMembership::InsideUnrefuted { .. }
        ));
    }
}
