//! Monte Carlo volume, surface and mean-width estimators.

use super::body::Body;
use super::estimate::Estimate;
use super::support::support_body;
use crate::error::{Error, Result};
use crate::geometry::constants::{mean_width_to_v1, unit_ball_volume, unit_sphere_area};
use crate::geometry::PointConfig;
use crate::linalg;
use crate::rng;
use rayon::prelude::*;

/// Runs `per` on uniform samples of `B[center, radius]`, one accumulator per
/// block of [`rng::BLOCK`] samples, returned in block order.
pub fn ball_blocks<A, M, F>(center: &[f64], radius: f64, samples: usize, seed: u64, make: M, per: F) -> Vec<A>
where
    A: Send,
    M: Fn() -> A + Sync,
    F: Fn(&mut A, &[f64]) + Sync,
{
    let dim = center.len();
    let blocks: Vec<(u64, usize)> = rng::blocks(samples).collect();
    blocks
        .into_par_iter()
        .map(|(b, len)| {
            let mut g = rng::stream(seed, b);
            let mut acc = make();
            let mut x = vec![0.0; dim];
            for _ in 0..len {
                let v = rng::in_unit_ball(&mut g, dim);
                for k in 0..dim {
                    x[k] = center[k] + radius * v[k];
                }
                per(&mut acc, &x);
            }
            acc
        })
        .collect()
}

/// Hit-or-miss volume of `{x : pred(x)}` inside `B[center, radius]`.
pub fn volume_in_ball<P>(center: &[f64], radius: f64, samples: usize, seed: u64, method: &str, pred: P) -> Estimate
where
    P: Fn(&[f64]) -> bool + Sync,
{
    let hits: u64 = ball_blocks(center, radius, samples, seed, || 0u64, |h, x| *h += pred(x) as u64)
        .into_iter()
        .sum();
    let scale = unit_ball_volume(center.len()) * radius.powi(center.len() as i32);
    Estimate::from_hits(hits, samples as u64, scale, seed, method)
}

/// Paired estimate of `vol(A) − vol(B)` from one sample stream; `pair` returns the two indicators.
pub fn paired_difference<P>(
    center: &[f64],
    radius: f64,
    samples: usize,
    seed: u64,
    method: &str,
    pair: P,
) -> (Estimate, Estimate, Estimate)
where
    P: Fn(&[f64]) -> (bool, bool) + Sync,
{
    let counts = ball_blocks(
        center,
        radius,
        samples,
        seed,
        || [0u64; 3],
        |c, x| {
            let (a, b) = pair(x);
            c[0] += a as u64;
            c[1] += b as u64;
            c[2] += (a != b) as u64;
        },
    );
    let [na, nb, ndiff] = counts
        .into_iter()
        .fold([0u64; 3], |acc, c| [acc[0] + c[0], acc[1] + c[1], acc[2] + c[2]]);
    let scale = unit_ball_volume(center.len()) * radius.powi(center.len() as i32);
    let n = samples as u64;
    let a = Estimate::from_hits(na, n, scale, seed, method);
    let b = Estimate::from_hits(nb, n, scale, seed, method);
    // a − b takes values in {−1, 0, 1}; its second moment is the disagreement rate
    let nf = samples.max(1) as f64;
    let mean = (na as f64 - nb as f64) / nf;
    let second = ndiff as f64 / nf;
    let var = if samples > 1 {
        (second - mean * mean).max(0.0) * nf / (nf - 1.0)
    } else {
        0.0
    };
    let diff = Estimate {
        value: scale * mean,
        stderr: scale * (var / nf).sqrt(),
        samples: n,
        seed,
        method: method.to_string(),
    };
    (a, b, diff)
}

/// Volume of `P^r` by rejection sampling in `B[circumcenter, sqrt(r² − r0²)]`.
pub fn mc_volume_body(body: &Body, samples: usize, seed: u64) -> Result<Estimate> {
    body.require_nonempty()?;
    if samples == 0 {
        return Err(Error::OutOfRange {
            what: "sample count",
            value: 0.0,
        });
    }
    let eps = 1e-12 * body.r;
    Ok(volume_in_ball(
        body.center(),
        body.outer_radius() + eps,
        samples,
        seed,
        "rejection-ball",
        |x| body.contains(x, 0.0),
    ))
}

pub fn mc_volume_polyhedron(config: &PointConfig, samples: usize, seed: u64) -> Result<Estimate> {
    mc_volume_body(&Body::new(config)?, samples, seed)
}

/// Surface area `2 V_{d−1}` of `P^r`: each generator sphere contributes the
/// fraction of its points lying in all other balls.
pub fn mc_surface_body(body: &Body, samples: usize, seed: u64) -> Result<Estimate> {
    body.require_nonempty()?;
    if samples == 0 {
        return Err(Error::OutOfRange {
            what: "sample count",
            value: 0.0,
        });
    }
    if body.outer_radius() <= 1e-12 * body.r {
        return Err(Error::Degenerate("P^r has empty interior".into()));
    }
    let d = body.dim;
    let sphere = unit_sphere_area(d) * body.r.powi(d as i32 - 1);
    let eps = 1e-12 * body.r;
    let mut value = 0.0;
    let mut var = 0.0;
    for (i, p) in body.generators.iter().enumerate() {
        let sub = rng::substream(seed, i as u64);
        let blocks: Vec<(u64, usize)> = rng::blocks(samples).collect();
        let hits: u64 = blocks
            .into_par_iter()
            .map(|(b, len)| {
                let mut g = rng::stream(sub, b);
                let mut h = 0u64;
                for _ in 0..len {
                    let v = rng::unit_vector(&mut g, d);
                    let x = linalg::axpy(p, body.r, &v);
                    let lim = (body.r + eps).powi(2);
                    if body
                        .generators
                        .iter()
                        .enumerate()
                        .all(|(j, q)| j == i || linalg::dist2(&x, q) <= lim)
                    {
                        h += 1;
                    }
                }
                h
            })
            .collect::<Vec<_>>()
            .into_iter()
            .sum();
        let e = Estimate::from_hits(hits, samples as u64, sphere, seed, "sphere-fraction");
        value += e.value;
        var += e.stderr * e.stderr;
    }
    Ok(Estimate {
        value,
        stderr: var.sqrt(),
        samples: samples as u64,
        seed,
        method: "sphere-fraction".into(),
    })
}

pub fn mc_surface_polyhedron(config: &PointConfig, samples: usize, seed: u64) -> Result<Estimate> {
    mc_surface_body(&Body::new(config)?, samples, seed)
}

/// `V_1` from the mean width over random antithetic direction pairs.
pub fn mean_width_body(body: &Body, directions: usize, seed: u64, tol: f64) -> Result<Estimate> {
    body.require_nonempty()?;
    if directions == 0 {
        return Err(Error::OutOfRange {
            what: "direction count",
            value: 0.0,
        });
    }
    let d = body.dim;
    let widths: Vec<Result<f64>> = (0..directions)
        .into_par_iter()
        .map(|k| {
            let mut g = rng::stream(seed, k as u64);
            let u = rng::unit_vector(&mut g, d);
            let neg = linalg::scale(&u, -1.0);
            Ok(support_body(body, &u, tol)?.value + support_body(body, &neg, tol)?.value)
        })
        .collect();
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for w in widths {
        let w = w?;
        sum += w;
        sum_sq += w * w;
    }
    let est = Estimate::from_moments(sum, sum_sq, directions as u64, seed, "mean-width");
    Ok(est.scaled(mean_width_to_v1(d)))
}

pub fn mean_width_polyhedron(config: &PointConfig, directions: usize, seed: u64, tol: f64) -> Result<Estimate> {
    mean_width_body(&Body::new(config)?, directions, seed, tol)
}
