//! Membership and Euclidean projection for `P^r = ∩ B[p_i, r]`.

use crate::error::{Error, Result};
use crate::geometry::meb::{minimal_enclosing_ball, EnclosingBall};
use crate::geometry::PointConfig;
use crate::linalg;

pub const DYKSTRA_MAX_SWEEPS: usize = 10_000;

/// A validated configuration with its deduplicated generators and enclosing ball.
#[derive(Clone, Debug)]
pub struct Body {
    pub dim: usize,
    pub r: f64,
    pub generators: Vec<Vec<f64>>,
    pub meb: EnclosingBall,
}

impl Body {
    pub fn new(config: &PointConfig) -> Result<Self> {
        config.validate()?;
        let generators = config.effective_points();
        let meb = minimal_enclosing_ball(&generators, 0)?;
        Ok(Body {
            dim: config.dim,
            r: config.radius,
            generators,
            meb,
        })
    }

    /// Errors unless `P^r` is nonempty.
    pub fn require_nonempty(&self) -> Result<()> {
        let r0 = self.meb.ball.radius;
        if r0 > self.r * (1.0 + 1e-12) {
            return Err(Error::Infeasible {
                circumradius: r0,
                r: self.r,
            });
        }
        Ok(())
    }

    pub fn r0(&self) -> f64 {
        self.meb.ball.radius
    }

    pub fn center(&self) -> &[f64] {
        &self.meb.ball.center
    }

    /// Radius of the ball about the circumcenter that contains `P^r`.
    pub fn outer_radius(&self) -> f64 {
        (self.r * self.r - self.r0() * self.r0()).max(0.0).sqrt()
    }

    pub fn contains(&self, y: &[f64], eps: f64) -> bool {
        let lim = (self.r + eps) * (self.r + eps);
        self.generators.iter().all(|p| linalg::dist2(p, y) <= lim)
    }

    /// Largest `|y − p_i| − r`.
    pub fn violation(&self, y: &[f64]) -> f64 {
        self.generators
            .iter()
            .map(|p| linalg::dist(p, y) - self.r)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// `y ∈ P^r` up to `eps`.
pub fn member_polyhedron(config: &PointConfig, y: &[f64], eps: f64) -> Result<bool> {
    config.validate()?;
    if y.len() != config.dim {
        return Err(Error::DimensionMismatch {
            expected: config.dim,
            got: y.len(),
        });
    }
    let lim = config.radius + eps;
    Ok(config.points.iter().all(|p| linalg::dist(p, y) <= lim))
}

fn project_ball(z: &[f64], c: &[f64], r: f64) -> Vec<f64> {
    let d = linalg::dist(z, c);
    if d <= r {
        z.to_vec()
    } else {
        let t = r / d;
        c.iter().zip(z).map(|(ci, zi)| ci + t * (zi - ci)).collect()
    }
}

/// Dykstra's alternating projections onto the generator balls.
pub fn project_body(body: &Body, y: &[f64], tol: f64) -> Result<Vec<f64>> {
    body.require_nonempty()?;
    if y.len() != body.dim {
        return Err(Error::DimensionMismatch {
            expected: body.dim,
            got: y.len(),
        });
    }
    if body.contains(y, 0.0) {
        return Ok(y.to_vec());
    }
    let n = body.generators.len();
    let mut x = y.to_vec();
    let mut q = vec![vec![0.0; body.dim]; n];
    let mut change = f64::INFINITY;
    for _ in 0..DYKSTRA_MAX_SWEEPS {
        change = 0.0f64;
        for (i, p) in body.generators.iter().enumerate() {
            let z = linalg::add(&x, &q[i]);
            let nx = project_ball(&z, p, body.r);
            let nq = linalg::sub(&z, &nx);
            change = change.max(linalg::dist(&nq, &q[i])).max(linalg::dist(&nx, &x));
            x = nx;
            q[i] = nq;
        }
        if change < tol && body.violation(&x) <= tol {
            return Ok(x);
        }
    }
    Err(Error::NotConverged {
        what: "ball-intersection projection",
        iterations: DYKSTRA_MAX_SWEEPS,
        residual: change,
    })
}

pub fn project_polyhedron(config: &PointConfig, y: &[f64], tol: f64) -> Result<Vec<f64>> {
    project_body(&Body::new(config)?, y, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar;

    fn cfg(points: Vec<Vec<f64>>, r: f64) -> PointConfig {
        PointConfig::new(points[0].len(), r, points).unwrap()
    }

    #[test]
    fn membership() {
        let c = cfg(vec![vec![-1.0, 0.0, 0.0], vec![1.0, 0.0, 0.0]], 2.0);
        assert!(member_polyhedron(&c, &[0.0, 0.0, 0.0], 1e-9).unwrap());
        assert!(member_polyhedron(&c, &[1.0, 0.0, 0.0], 1e-9).unwrap());
        assert!(!member_polyhedron(&c, &[4.0, 0.0, 0.0], 1e-9).unwrap());
        assert!(member_polyhedron(&c, &[0.0, 0.0], 1e-9).is_err());
    }

    #[test]
    fn projection_fixed_point_and_single_ball() {
        let c = cfg(vec![vec![1.0, 1.0]], 1.0);
        assert_eq!(project_polyhedron(&c, &[1.2, 1.1], 1e-12).unwrap(), vec![1.2, 1.1]);
        let p = project_polyhedron(&c, &[4.0, 5.0], 1e-12).unwrap();
        assert!((p[0] - 1.6).abs() < 1e-12 && (p[1] - 1.8).abs() < 1e-12);
    }

    #[test]
    fn projection_matches_planar_nearest_point() {
        let pts = vec![vec![-1.0, 0.0], vec![1.0, 0.0]];
        let c = cfg(pts.clone(), 2.0);
        let ap = planar::disk_intersection(&c).unwrap();
        for y in [[5.0, 0.0], [0.3, 3.0], [-2.0, -2.5], [1.5, 1.0]] {
            let a = project_polyhedron(&c, &y, 1e-13).unwrap();
            let b = planar::nearest_point_2d(&ap, y).unwrap();
            assert!(linalg::dist(&a, &b) < 1e-7, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn infeasible_projection_errors() {
        let c = cfg(vec![vec![-3.0, 0.0], vec![3.0, 0.0]], 1.0);
        assert!(matches!(
            project_polyhedron(&c, &[0.0, 0.0], 1e-9),
            Err(Error::Infeasible { .. })
        ));
    }
}
