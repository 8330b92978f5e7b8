//! Random instances normalized to circumradius `r0` about the origin.

use super::record::{InstanceKind, InstanceSpec};
use crate::error::{Error, Result};
use crate::geometry::meb::minimal_enclosing_ball;
use crate::geometry::PointConfig;
use crate::linalg;
use crate::rng;
use crate::sphere::{self, hemisphere_free, SphericalConfig};
use nalgebra::{DMatrix, DVector};
use rand::Rng;

pub const MAX_ATTEMPTS: usize = 100_000;
/// Smallest barycentric coordinate of the origin accepted for centered simplices.
pub const MIN_BARYCENTRIC: f64 = 1e-3;

pub fn gen_config(spec: &InstanceSpec) -> Result<PointConfig> {
    if !(spec.r0 > 0.0) {
        return Err(Error::OutOfRange {
            what: "r0",
            value: spec.r0,
        });
    }
    match spec.kind {
        InstanceKind::Generic => gen_generic(spec.dim, spec.count, spec.r0, spec.r, spec.seed),
        InstanceKind::AntipodalPair => {
            let e = linalg::axis(spec.dim, 0);
            PointConfig::new(
                spec.dim,
                spec.r,
                vec![linalg::scale(&e, -spec.r0), linalg::scale(&e, spec.r0)],
            )
        }
        InstanceKind::SimplexCentered => {
            let l = spec.count.saturating_sub(1).clamp(1, spec.dim);
            Ok(gen_simplex_centered(spec.dim, l, spec.r0, spec.seed)?
                .config
                .with_radius(spec.r))
        }
        InstanceKind::Covering | InstanceKind::Spherical => Err(Error::HypothesisViolated(format!(
            "{:?} instances have their own generators",
            spec.kind
        ))),
    }
}

/// `count` uniform points of the unit ball, translated and scaled so that
/// their enclosing ball is `B[o, r0]`.
pub fn gen_generic(dim: usize, count: usize, r0: f64, r: f64, seed: u64) -> Result<PointConfig> {
    if count < 2 {
        return Err(Error::OutOfRange {
            what: "point count",
            value: count as f64,
        });
    }
    for attempt in 0..MAX_ATTEMPTS as u64 {
        let mut g = rng::stream(seed, attempt);
        let pts: Vec<Vec<f64>> = (0..count).map(|_| rng::in_unit_ball(&mut g, dim)).collect();
        let eb = minimal_enclosing_ball(&pts, seed)?;
        if eb.ball.radius < 1e-6 {
            continue;
        }
        let s = r0 / eb.ball.radius;
        let pts: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| linalg::scale(&linalg::sub(p, &eb.ball.center), s))
            .collect();
        let check = minimal_enclosing_ball(&pts, seed)?;
        if (check.ball.radius - r0).abs() <= 1e-9 * r0.max(1.0)
            && linalg::norm(&check.ball.center) <= 1e-9 * r0.max(1.0)
        {
            return PointConfig::new(dim, r, pts);
        }
    }
    Err(Error::GenerationFailed {
        what: "generic configuration",
        attempts: MAX_ATTEMPTS,
    })
}

/// An `l`-simplex inscribed in `r0 S^{d−1}` with the origin in its relative interior.
#[derive(Clone, Debug)]
pub struct CenteredSimplex {
    pub config: PointConfig,
    /// Barycentric coordinates of the origin.
    pub barycentric: Vec<f64>,
    pub attempts: usize,
}

fn random_frame(dim: usize, l: usize, g: &mut impl Rng) -> Vec<Vec<f64>> {
    loop {
        let vs: Vec<Vec<f64>> = (0..l).map(|_| rng::gaussian_vec(g, dim)).collect();
        let b = linalg::orthonormal_basis(&vs, 1e-8);
        if b.len() == l {
            return b;
        }
    }
}

fn embed(frame: &[Vec<f64>], local: &[f64], scale: f64) -> Vec<f64> {
    let mut x = vec![0.0; frame[0].len()];
    for (c, b) in local.iter().zip(frame) {
        x = linalg::axpy(&x, c * scale, b);
    }
    x
}

/// Barycentric coordinates of the origin with respect to `l+1` points of `R^l`.
pub fn barycentric_of_origin(local: &[Vec<f64>]) -> Option<Vec<f64>> {
    let n = local.len();
    let l = n - 1;
    let m = DMatrix::from_fn(n, n, |i, j| if i < l { local[j][i] } else { 1.0 });
    let mut rhs = DVector::zeros(n);
    rhs[l] = 1.0;
    linalg::solve(m, rhs).map(|v| v.iter().copied().collect())
}

pub fn gen_simplex_centered(d: usize, l: usize, r0: f64, seed: u64) -> Result<CenteredSimplex> {
    if l == 0 || l > d {
        return Err(Error::OutOfRange {
            what: "simplex dimension",
            value: l as f64,
        });
    }
    let mut g = rng::stream(seed, 0x51_4d);
    let frame = random_frame(d, l, &mut g);
    for attempt in 1..=MAX_ATTEMPTS {
        let local: Vec<Vec<f64>> = (0..=l).map(|_| rng::unit_vector(&mut g, l)).collect();
        let Some(bary) = barycentric_of_origin(&local) else {
            continue;
        };
        if bary.iter().all(|&b| b >= MIN_BARYCENTRIC) {
            let points = local.iter().map(|p| embed(&frame, p, r0)).collect();
            return Ok(CenteredSimplex {
                config: PointConfig::new(d, r0, points)?,
                barycentric: bary,
                attempts: attempt,
            });
        }
    }
    Err(Error::GenerationFailed {
        what: "centered simplex",
        attempts: MAX_ATTEMPTS,
    })
}

/// Regular `l`-simplex inscribed in `r0 S^{d−1}`, randomly placed.
pub fn gen_regular_simplex(d: usize, l: usize, r0: f64, seed: u64) -> Result<PointConfig> {
    if l == 0 || l > d {
        return Err(Error::OutOfRange {
            what: "simplex dimension",
            value: l as f64,
        });
    }
    let mut g = rng::stream(seed, 0x52_45);
    let frame = random_frame(d, l, &mut g);
    let points = sphere::regular_simplex(l - 1)
        .iter()
        .map(|p| embed(&frame, p, r0))
        .collect();
    PointConfig::new(d, r0, points)
}

/// `count` random points on `S^d` contained in no open hemisphere,
/// excluding borderline draws.
pub fn gen_hemisphere_free(sphere_dim: usize, count: usize, epsilon: f64, seed: u64) -> Result<SphericalConfig> {
    if count < 2 {
        return Err(Error::OutOfRange {
            what: "point count",
            value: count as f64,
        });
    }
    for attempt in 0..MAX_ATTEMPTS as u64 {
        let mut g = rng::stream(seed, attempt);
        let pts: Vec<Vec<f64>> = (0..count).map(|_| rng::unit_vector(&mut g, sphere_dim + 1)).collect();
        let cfg = SphericalConfig::new(sphere_dim, epsilon, pts)?;
        let check = hemisphere_free(&cfg);
        if check.free && !check.borderline {
            return Ok(cfg);
        }
    }
    Err(Error::GenerationFailed {
        what: "hemisphere-free configuration",
        attempts: MAX_ATTEMPTS,
    })
}
