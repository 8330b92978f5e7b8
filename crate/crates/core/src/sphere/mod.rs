//! Caps, ε-neighbourhoods, hemisphere tests and Voronoi densities on `S^d ⊂ E^{d+1}`.

use crate::error::{Error, Result};
use crate::geometry::caps::cap_lateral_area;
use crate::geometry::constants::unit_sphere_area;
use crate::highd::Estimate;
use crate::linalg;
use crate::rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

/// Band around zero in which the hemisphere test is flagged as borderline.
pub const HEMISPHERE_TOL: f64 = 1e-9;
const UNIT_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphericalConfig {
    pub sphere_dim: usize,
    pub epsilon: f64,
    pub points: Vec<Vec<f64>>,
}

impl SphericalConfig {
    pub fn new(sphere_dim: usize, epsilon: f64, points: Vec<Vec<f64>>) -> Result<Self> {
        let c = SphericalConfig {
            sphere_dim,
            epsilon,
            points,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sphere_dim == 0 {
            return Err(Error::OutOfRange {
                what: "sphere dimension",
                value: 0.0,
            });
        }
        if !(self.epsilon > 0.0 && self.epsilon <= FRAC_PI_2) {
            return Err(Error::OutOfRange {
                what: "epsilon",
                value: self.epsilon,
            });
        }
        if self.points.is_empty() {
            return Err(Error::EmptyInput("spherical point set"));
        }
        for p in &self.points {
            if p.len() != self.sphere_dim + 1 {
                return Err(Error::DimensionMismatch {
                    expected: self.sphere_dim + 1,
                    got: p.len(),
                });
            }
            let n = linalg::norm(p);
            if (n - 1.0).abs() > UNIT_TOL {
                return Err(Error::OutOfRange {
                    what: "point norm",
                    value: n,
                });
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.sphere_dim + 1
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        SphericalConfig::new(self.sphere_dim, epsilon, self.points.clone())
    }
}

/// Geodesic distance between unit vectors.
pub fn geodesic(a: &[f64], b: &[f64]) -> f64 {
    linalg::dot(a, b).clamp(-1.0, 1.0).acos()
}

/// Total measure `(d+1) ω_{d+1}` of `S^d`.
pub fn sphere_measure(d: usize) -> f64 {
    unit_sphere_area(d + 1)
}

/// `SV_d(B_{S^d}[x, ε])` for `0 ≤ ε ≤ π`.
pub fn spherical_cap_measure(d: usize, epsilon: f64) -> Result<f64> {
    if d == 0 {
        return Err(Error::OutOfRange {
            what: "sphere dimension",
            value: 0.0,
        });
    }
    if !(0.0..=PI).contains(&epsilon) {
        return Err(Error::OutOfRange {
            what: "epsilon",
            value: epsilon,
        });
    }
    cap_lateral_area(d + 1, 1.0, epsilon)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum HemisphereCertificate {
    /// Unit `u` with `⟨u, x_i⟩ ≥ margin > 0` for all `i`.
    Witness(Vec<f64>),
    /// Convex weights with `Σ w_i x_i ≈ o`.
    Coefficients(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HemisphereCheck {
    /// `true` when no open hemisphere contains all points.
    pub free: bool,
    /// Optimal `δ` of `max min_i ⟨u, x_i⟩` over `|u| ≤ 1`, i.e. `dist(o, conv X)`.
    pub margin: f64,
    /// The origin is within [`HEMISPHERE_TOL`] of the boundary of `conv X`.
    pub borderline: bool,
    pub certificate: HemisphereCertificate,
}

pub fn hemisphere_free(config: &SphericalConfig) -> HemisphereCheck {
    let dim = config.ambient_dim();
    let origin = vec![0.0; dim];
    let proj = linalg::nearest_point_in_hull(&config.points, &origin);
    let margin = proj.distance;
    if margin > HEMISPHERE_TOL {
        let u = linalg::scale(&proj.point, 1.0 / margin);
        return HemisphereCheck {
            free: false,
            margin,
            borderline: false,
            certificate: HemisphereCertificate::Witness(u),
        };
    }
    // depth ≥ t/√dim once the cross-polytope ±t e_k lies in conv X
    let t = 2.0 * HEMISPHERE_TOL * (dim as f64).sqrt();
    let deep = (0..dim).all(|k| {
        [-t, t].iter().all(|&s| {
            let mut y = vec![0.0; dim];
            y[k] = s;
            linalg::nearest_point_in_hull(&config.points, &y).distance <= 1e-13
        })
    });
    HemisphereCheck {
        free: true,
        margin,
        borderline: !deep,
        certificate: HemisphereCertificate::Coefficients(proj.weights),
    }
}

/// Runs `per` on uniform samples of `S^d`, one accumulator per block.
fn sphere_blocks<A, M, F>(ambient: usize, samples: usize, seed: u64, make: M, per: F) -> Vec<A>
where
    A: Send,
    M: Fn() -> A + Sync,
    F: Fn(&mut A, &[f64]) + Sync,
{
    let blocks: Vec<(u64, usize)> = rng::blocks(samples).collect();
    blocks
        .into_par_iter()
        .map(|(b, len)| {
            let mut g = rng::stream(seed, b);
            let mut acc = make();
            for _ in 0..len {
                let x = rng::unit_vector(&mut g, ambient);
                per(&mut acc, &x);
            }
            acc
        })
        .collect()
}

/// Monte Carlo `SV_d(X_ε)`.
pub fn mc_neighborhood_measure(config: &SphericalConfig, samples: usize, seed: u64) -> Result<Estimate> {
    config.validate()?;
    let cos_eps = config.epsilon.cos();
    let hits: u64 = sphere_blocks(
        config.ambient_dim(),
        samples,
        seed,
        || 0u64,
        |h, x| {
            // geodesic ≤ ε  ⇔  ⟨x, p⟩ ≥ cos ε
            if config
                .points
                .iter()
                .any(|p| linalg::dot(x, p).clamp(-1.0, 1.0) >= cos_eps)
            {
                *h += 1;
            }
        },
    )
    .into_iter()
    .sum();
    Ok(Estimate::from_hits(
        hits,
        samples as u64,
        sphere_measure(config.sphere_dim),
        seed,
        "sphere-neighbourhood",
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VoronoiSite {
    pub site: usize,
    /// `SV(V_i)`.
    pub cell: Estimate,
    /// `SV(B[x_i, ε] ∩ V_i)`.
    pub cap_in_cell: Estimate,
    /// Fraction of the cell within ε of its site.
    pub density: f64,
    pub density_stderr: f64,
    /// `cap(ε) / SV(H_i)`.
    pub bound: f64,
    /// `density − bound`.
    pub margin: f64,
}

pub fn mc_voronoi_density(config: &SphericalConfig, samples: usize, seed: u64) -> Result<Vec<VoronoiSite>> {
    config.validate()?;
    let check = hemisphere_free(config);
    if !check.free {
        return Err(Error::HypothesisViolated(format!(
            "points lie in an open hemisphere (margin {:.3e})",
            check.margin
        )));
    }
    let m = config.points.len();
    for i in 0..m {
        for j in 0..i {
            if geodesic(&config.points[i], &config.points[j]) <= 1e-12 {
                return Err(Error::HypothesisViolated(format!("sites {j} and {i} coincide")));
            }
        }
    }
    let cos_eps = config.epsilon.cos();
    let counts = sphere_blocks(
        config.ambient_dim(),
        samples,
        seed,
        || vec![[0u64; 2]; m],
        |c, x| {
            let (best, cos_best) = config
                .points
                .iter()
                .map(|p| linalg::dot(x, p).clamp(-1.0, 1.0))
                .enumerate()
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            c[best][0] += 1;
            if cos_best >= cos_eps {
                c[best][1] += 1;
            }
        },
    );
    let mut totals = vec![[0u64; 2]; m];
    for block in counts {
        for (t, c) in totals.iter_mut().zip(block) {
            t[0] += c[0];
            t[1] += c[1];
        }
    }
    let total = sphere_measure(config.sphere_dim);
    let bound = spherical_cap_measure(config.sphere_dim, config.epsilon)? / (total / 2.0);
    Ok(totals
        .iter()
        .enumerate()
        .map(|(i, &[cell, cap])| {
            let n = cell as f64;
            let density = if cell > 0 { cap as f64 / n } else { f64::NAN };
            let density_stderr = if cell > 1 {
                let q = (cap as f64 + 1.0) / (n + 2.0);
                (q * (1.0 - q) / n).sqrt()
            } else {
                f64::NAN
            };
            VoronoiSite {
                site: i,
                cell: Estimate::from_hits(cell, samples as u64, total, seed, "voronoi-cell"),
                cap_in_cell: Estimate::from_hits(cap, samples as u64, total, seed, "voronoi-cap"),
                density,
                density_stderr,
                bound,
                margin: density - bound,
            }
        })
        .collect())
}

/// Vertices of the regular simplex inscribed in `S^d`.
pub fn regular_simplex(d: usize) -> Vec<Vec<f64>> {
    let n = d + 2;
    let c = 1.0 / n as f64;
    // centred standard basis of E^{d+2}, then coordinates in an orthonormal basis of its span
    let raw: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 - c } else { -c }).collect())
        .collect();
    let basis = linalg::orthonormal_basis(&raw, 1e-12);
    raw.iter()
        .map(|v| {
            let w: Vec<f64> = basis.iter().map(|b| linalg::dot(v, b)).collect();
            let n = linalg::norm(&w);
            linalg::scale(&w, 1.0 / n)
        })
        .collect()
}

/// `±e_k` for `k < d+1`.
pub fn cross_polytope(d: usize) -> Vec<Vec<f64>> {
    let n = d + 1;
    (0..n)
        .flat_map(|k| [linalg::axis(n, k), linalg::scale(&linalg::axis(n, k), -1.0)])
        .collect()
}
