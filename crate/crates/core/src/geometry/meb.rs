//! Minimal enclosing ball (Welzl's recursion with move-to-front).

use super::types::BallSpec;
use crate::error::{Error, Result};
use crate::linalg::{self, nearest_point_in_hull, solve};
use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

/// Largest supported dimension.
pub const MAX_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnclosingBall {
    pub ball: BallSpec,
    /// Indices of input points on the boundary whose hull contains the center.
    pub support: Vec<usize>,
}

/// Certificate data for an enclosing ball.
#[derive(Clone, Copy, Debug)]
pub struct MebCertificate {
    /// Largest `|p - c| - R` over the input (≤ 0 up to rounding).
    pub max_excess: f64,
    /// Distance from the center to the hull of the support points.
    pub center_gap: f64,
}

/// Circumcenter and squared radius of `pts` inside their affine hull.
fn circumsphere(pts: &[&[f64]]) -> Option<(Vec<f64>, f64)> {
    let p0 = pts[0];
    if pts.len() == 1 {
        return Some((p0.to_vec(), 0.0));
    }
    let vs: Vec<Vec<f64>> = pts[1..].iter().map(|p| linalg::sub(p, p0)).collect();
    let k = vs.len();
    let mut g = DMatrix::zeros(k, k);
    let mut b = DVector::zeros(k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = 2.0 * linalg::dot(&vs[i], &vs[j]);
        }
        b[i] = linalg::dot(&vs[i], &vs[i]);
    }
    let lam = solve(g, b)?;
    let mut c = p0.to_vec();
    for (i, v) in vs.iter().enumerate() {
        for (ck, vk) in c.iter_mut().zip(v) {
            *ck += lam[i] * vk;
        }
    }
    let r2 = linalg::dist2(&c, p0);
    Some((c, r2))
}

struct Welzl<'a> {
    pts: &'a [Vec<f64>],
    order: Vec<usize>,
    stack: Vec<usize>,
    center: Vec<f64>,
    r2: f64,
    defining: Vec<usize>,
    dim: usize,
    slack: f64,
}

impl Welzl<'_> {
    fn outside(&self, idx: usize) -> bool {
        let d = linalg::dist(&self.pts[idx], &self.center);
        d > self.r2.sqrt() + self.slack
    }

    fn set_from_stack(&mut self) -> bool {
        if self.stack.is_empty() {
            self.center = self.pts[self.order[0]].clone();
            self.r2 = -1.0;
            self.defining.clear();
            return true;
        }
        let refs: Vec<&[f64]> = self.stack.iter().map(|&i| self.pts[i].as_slice()).collect();
        match circumsphere(&refs) {
            Some((c, r2)) => {
                self.center = c;
                self.r2 = r2;
                self.defining = self.stack.clone();
                true
            }
            None => false,
        }
    }

    fn mtf(&mut self, end: usize) {
        if !self.set_from_stack() {
            return;
        }
        if self.stack.len() == self.dim + 1 {
            return;
        }
        let mut i = 0;
        while i < end {
            let idx = self.order[i];
            if self.r2 < 0.0 || self.outside(idx) {
                self.stack.push(idx);
                let saved = (self.center.clone(), self.r2, self.defining.clone());
                let before = self.stack.len();
                self.mtf(i);
                self.stack.truncate(before - 1);
                if self.defining.last() != Some(&idx) && !self.defining.contains(&idx) {
                    // affinely dependent push; keep the previous ball
                    self.center = saved.0;
                    self.r2 = saved.1;
                    self.defining = saved.2;
                } else {
                    self.order.remove(i);
                    self.order.insert(0, idx);
                }
            }
            i += 1;
        }
    }
}

/// Smallest ball containing `points`; `seed` fixes the shuffle order.
pub fn minimal_enclosing_ball(points: &[Vec<f64>], seed: u64) -> Result<EnclosingBall> {
    let first = points.first().ok_or(Error::EmptyInput("point set"))?;
    let dim = first.len();
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::OutOfRange {
            what: "dimension",
            value: dim as f64,
        });
    }
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: p.len(),
        });
    }
    let scale = points
        .iter()
        .flat_map(|p| p.iter())
        .fold(1e-300f64, |m, x| m.max(x.abs()));
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.shuffle(&mut crate::rng::stream(seed, 0x004d_4542));
    let mut w = Welzl {
        pts: points,
        order,
        stack: Vec::with_capacity(dim + 1),
        center: first.clone(),
        r2: -1.0,
        defining: vec![],
        dim,
        slack: 1e-13 * scale,
    };
    // repeat on the farthest violator if rounding left a point outside
    for _ in 0..64 {
        let n = w.order.len();
        w.stack.clear();
        w.mtf(n);
        let radius = w.r2.max(0.0).sqrt();
        let far = (0..points.len())
            .max_by(|&a, &b| linalg::dist(&points[a], &w.center).total_cmp(&linalg::dist(&points[b], &w.center)))
            .unwrap();
        if linalg::dist(&points[far], &w.center) <= radius + 1e-11 * scale {
            break;
        }
        let pos = w.order.iter().position(|&i| i == far).unwrap();
        w.order.remove(pos);
        w.order.insert(0, far);
    }
    let radius = w.r2.max(0.0).sqrt();
    let mut support = w.defining.clone();
    if support.is_empty() {
        support.push(w.order[0]);
    }
    let ball = BallSpec {
        center: w.center.clone(),
        radius,
    };
    support = prune_support(points, &ball, support, scale);
    support.sort_unstable();
    Ok(EnclosingBall { ball, support })
}

/// Drops support points whose weight in the center's convex combination vanishes.
fn prune_support(points: &[Vec<f64>], ball: &BallSpec, support: Vec<usize>, scale: f64) -> Vec<usize> {
    if support.len() <= 1 {
        return support;
    }
    let sp: Vec<Vec<f64>> = support.iter().map(|&i| points[i].clone()).collect();
    let proj = nearest_point_in_hull(&sp, &ball.center);
    if proj.distance > 1e-9 * scale {
        // center not in hull of the defining set: fall back to all boundary points
        let tol = 1e-9 * scale;
        return (0..points.len())
            .filter(|&i| (linalg::dist(&points[i], &ball.center) - ball.radius).abs() <= tol)
            .collect();
    }
    support
        .into_iter()
        .zip(proj.weights)
        .filter(|&(_, w)| w > 1e-12)
        .map(|(i, _)| i)
        .collect()
}

/// Checks containment and minimality of an enclosing ball.
pub fn certify(points: &[Vec<f64>], eb: &EnclosingBall) -> MebCertificate {
    let max_excess = points
        .iter()
        .map(|p| linalg::dist(p, &eb.ball.center) - eb.ball.radius)
        .fold(f64::NEG_INFINITY, f64::max);
    let sp: Vec<Vec<f64>> = eb.support.iter().map(|&i| points[i].clone()).collect();
    let center_gap = nearest_point_in_hull(&sp, &eb.ball.center).distance;
    MebCertificate { max_excess, center_gap }
}

/// Circumradius `r_cr` of a finite set.
pub fn circumradius(points: &[Vec<f64>]) -> Result<f64> {
    Ok(minimal_enclosing_ball(points, 0)?.ball.radius)
}
