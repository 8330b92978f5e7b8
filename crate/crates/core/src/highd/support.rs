//! Exact support function of a ball intersection.
//!
//! The maximizer of `⟨u, x⟩` over `∩ B[p_i, r]` lies on the sphere
//! intersection of some active set `A` with `|A| ≤ d`; on that sphere it is
//! the point furthest along the component of `u` orthogonal to `aff(A)`.
//! Constraints are added lazily: solve over a working set by enumerating its
//! subsets, then add the most violated generator until none is violated.

use super::body::Body;
use crate::error::{Error, Result};
use crate::linalg::{self, solve};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportPoint {
    pub value: f64,
    pub point: Vec<f64>,
    /// Generators active at the maximizer.
    pub active: Vec<usize>,
    /// Nonnegative multipliers with `u ≈ Σ μ_i (x − p_i) / r`.
    pub multipliers: Vec<f64>,
    /// `|u − Σ μ_i (x − p_i) / r|`.
    pub stationarity: f64,
    /// Largest `|x − p_i| − r`.
    pub feasibility: f64,
}

/// Circumcenter of `pts` in their affine hull and the orthonormal basis of its direction space.
fn flat_center(pts: &[&[f64]]) -> Option<(Vec<f64>, f64, Vec<Vec<f64>>)> {
    let p0 = pts[0];
    let vs: Vec<Vec<f64>> = pts[1..].iter().map(|p| linalg::sub(p, p0)).collect();
    let k = vs.len();
    let basis = linalg::orthonormal_basis(&vs, 1e-10);
    if basis.len() < k {
        return None;
    }
    if k == 0 {
        return Some((p0.to_vec(), 0.0, basis));
    }
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
        c = linalg::axpy(&c, lam[i], v);
    }
    let r2 = linalg::dist2(&c, p0);
    Some((c, r2, basis))
}

/// Best point on the sphere intersection of `subset`, if it exists.
fn face_candidate(body: &Body, subset: &[usize], u: &[f64]) -> Option<Vec<f64>> {
    let pts: Vec<&[f64]> = subset.iter().map(|&i| body.generators[i].as_slice()).collect();
    let (c, r2, basis) = flat_center(&pts)?;
    let rho2 = body.r * body.r - r2;
    if rho2 < 0.0 {
        return None;
    }
    let mut w = u.to_vec();
    for b in &basis {
        w = linalg::axpy(&w, -linalg::dot(&w, b), b);
    }
    let wn = linalg::norm(&w);
    if wn <= 1e-14 {
        return None;
    }
    Some(linalg::axpy(&c, rho2.sqrt() / wn, &w))
}

fn subsets_up_to(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if !cur.is_empty() {
            f(cur);
        }
        if cur.len() == k {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut f);
}

fn stationarity(body: &Body, x: &[f64], u: &[f64], tol: f64) -> (Vec<usize>, Vec<f64>, f64) {
    let active: Vec<usize> = (0..body.generators.len())
        .filter(|&i| linalg::dist(x, &body.generators[i]) >= body.r - tol)
        .collect();
    let normals: Vec<Vec<f64>> = active
        .iter()
        .map(|&i| linalg::scale(&linalg::sub(x, &body.generators[i]), 1.0 / body.r))
        .collect();
    // u must lie in the cone of the active normals
    let un = linalg::norm(u);
    let mut best: (Vec<f64>, f64) = (vec![0.0; active.len()], un);
    if !normals.is_empty() {
        let mu = linalg::nnls(&normals, u);
        let mut res = u.to_vec();
        for (m, n) in mu.iter().zip(&normals) {
            res = linalg::axpy(&res, -m, n);
        }
        best = (mu, linalg::norm(&res));
    }
    (active, best.0, best.1)
}

/// `h(u) = max ⟨u, x⟩` over `P^r`, with a feasible maximizer and KKT data.
pub fn support_body(body: &Body, u: &[f64], tol: f64) -> Result<SupportPoint> {
    body.require_nonempty()?;
    if u.len() != body.dim {
        return Err(Error::DimensionMismatch {
            expected: body.dim,
            got: u.len(),
        });
    }
    let n = body.generators.len();
    let scale = body.r + linalg::norm(body.center());
    let feas_tol = 1e-12 * scale;
    // start from the generator furthest against u: its ball binds first
    let first = (0..n)
        .min_by(|&a, &b| linalg::dot(&body.generators[a], u).total_cmp(&linalg::dot(&body.generators[b], u)))
        .unwrap();
    let mut working = vec![first];
    loop {
        let mut best: Option<(f64, Vec<f64>)> = None;
        let work_pts: Vec<usize> = working.clone();
        subsets_up_to(work_pts.len(), body.dim, |sub| {
            let subset: Vec<usize> = sub.iter().map(|&k| work_pts[k]).collect();
            if let Some(x) = face_candidate(body, &subset, u) {
                let ok = work_pts
                    .iter()
                    .all(|&i| linalg::dist(&x, &body.generators[i]) <= body.r + feas_tol);
                let v = linalg::dot(&x, u);
                if ok && best.as_ref().is_none_or(|b| v > b.0) {
                    best = Some((v, x));
                }
            }
        });
        let (value, x) = match best {
            Some(b) => b,
            None => {
                // all candidates degenerate (u inside an active flat); fall back to the center
                let c = body.center().to_vec();
                (linalg::dot(&c, u), c)
            }
        };
        let worst = (0..n)
            .filter(|i| !working.contains(i))
            .map(|i| (i, linalg::dist(&x, &body.generators[i]) - body.r))
            .max_by(|a, b| a.1.total_cmp(&b.1));
        match worst {
            Some((i, viol)) if viol > feas_tol => working.push(i),
            _ => {
                let (active, multipliers, stat) = stationarity(body, &x, u, tol.max(1e-9 * scale));
                let feasibility = body.violation(&x);
                return Ok(SupportPoint {
                    value,
                    point: x,
                    active,
                    multipliers,
                    stationarity: stat,
                    feasibility,
                });
            }
        }
    }
}

pub fn support_polyhedron(config: &crate::geometry::PointConfig, u: &[f64], tol: f64) -> Result<SupportPoint> {
    support_body(&Body::new(config)?, u, tol)
}
