//! Inradius of `P^r` as `r − R`, with `R` bracketed through the dual of the
//! minimal-enclosing-ball problem:
//! `max_λ Σ λ_i |p_i − c(λ)|²`, `c(λ) = Σ λ_i p_i`, over the simplex.
//! Any `λ` gives `sqrt(D(λ)) ≤ R ≤ max_i |p_i − c(λ)|`.

use super::body::Body;
use crate::error::{Error, Result};
use crate::geometry::PointConfig;
use crate::linalg;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InradiusCertificate {
    pub center: Vec<f64>,
    pub inradius: f64,
    /// Certified bracket on the inradius.
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
}

/// Frank–Wolfe with away steps and exact line search on the dual.
pub fn enclosing_radius_dual(points: &[Vec<f64>], tol: f64, max_iter: usize) -> Result<(Vec<f64>, f64, f64, usize)> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput("point set"));
    }
    let mut lam = vec![0.0; n];
    lam[0] = 1.0;
    let mut c = points[0].clone();
    let sq: Vec<f64> = points.iter().map(|p| linalg::dot(p, p)).collect();
    let mut lo = 0.0;
    let mut hi = f64::INFINITY;
    for it in 0..max_iter {
        // g_i = |p_i|² − 2⟨p_i, c⟩
        let g: Vec<f64> = (0..n).map(|i| sq[i] - 2.0 * linalg::dot(&points[i], &c)).collect();
        let cc = linalg::dot(&c, &c);
        let lg: f64 = lam.iter().zip(&g).map(|(l, gi)| l * gi).sum();
        let dual = (lg + cc).max(0.0);
        let (far, gfar) = g
            .iter()
            .copied()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let primal = (gfar + cc).max(0.0);
        lo = f64::max(lo, dual.sqrt());
        hi = f64::min(hi, primal.sqrt());
        if hi - lo <= tol {
            return Ok((c, lo, hi, it));
        }
        let (near, gnear) = (0..n)
            .filter(|&i| lam[i] > 0.0)
            .map(|i| (i, g[i]))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let fw_gap = gfar - lg;
        let away_gap = lg - gnear;
        if fw_gap >= away_gap {
            let dvec = linalg::sub(&points[far], &c);
            let dd = linalg::dot(&dvec, &dvec);
            if dd == 0.0 {
                return Ok((c, lo, hi, it));
            }
            let step = (fw_gap / (2.0 * dd)).clamp(0.0, 1.0);
            lam.iter_mut().for_each(|l| *l *= 1.0 - step);
            lam[far] += step;
            c = linalg::axpy(&c, step, &dvec);
        } else {
            let dvec = linalg::sub(&c, &points[near]);
            let dd = linalg::dot(&dvec, &dvec);
            let max_step = lam[near] / (1.0 - lam[near]);
            if dd == 0.0 || !max_step.is_finite() {
                return Ok((c, lo, hi, it));
            }
            let step = (away_gap / (2.0 * dd)).clamp(0.0, max_step);
            lam.iter_mut().for_each(|l| *l *= 1.0 + step);
            lam[near] -= step;
            if step == max_step {
                lam[near] = 0.0;
            }
            c = linalg::axpy(&c, step, &dvec);
        }
    }
    Err(Error::NotConverged {
        what: "enclosing-ball dual",
        iterations: max_iter,
        residual: hi - lo,
    })
}

/// Inradius of `P^r` with a certified bracket, independent of Welzl's algorithm.
pub fn inradius_certified(config: &PointConfig, tol: f64) -> Result<InradiusCertificate> {
    let body = Body::new(config)?;
    body.require_nonempty()?;
    let (center, lo, hi, iterations) = enclosing_radius_dual(&body.generators, tol, 2_000_000)?;
    let r = body.r;
    Ok(InradiusCertificate {
        center,
        inradius: r - 0.5 * (lo + hi),
        lower: r - hi,
        upper: r - lo,
        iterations,
    })
}
