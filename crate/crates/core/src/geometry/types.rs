use crate::error::{Error, Result};
use crate::highd::Estimate;
use crate::linalg;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The generator set `P ⊂ E^d` together with the ball radius `r`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointConfig {
    pub dim: usize,
    #[serde(rename = "r")]
    pub radius: f64,
    pub points: Vec<Vec<f64>>,
}

impl PointConfig {
    pub fn new(dim: usize, radius: f64, points: Vec<Vec<f64>>) -> Result<Self> {
        let cfg = PointConfig { dim, radius, points };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::OutOfRange {
                what: "dimension",
                value: 0.0,
            });
        }
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::OutOfRange {
                what: "radius r",
                value: self.radius,
            });
        }
        if self.points.is_empty() {
            return Err(Error::EmptyInput("point configuration"));
        }
        for p in &self.points {
            if p.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::Degenerate("non-finite coordinate".into()));
            }
        }
        Ok(())
    }

    /// Distinct points (coordinates equal up to `1e-12` relative scale are merged).
    pub fn effective_points(&self) -> Vec<Vec<f64>> {
        let scale = self
            .points
            .iter()
            .flat_map(|p| p.iter())
            .fold(self.radius, |m, x| m.max(x.abs()));
        let tol2 = (1e-12 * scale).powi(2);
        let mut out: Vec<Vec<f64>> = Vec::with_capacity(self.points.len());
        for p in &self.points {
            if !out.iter().any(|q| linalg::dist2(p, q) <= tol2) {
                out.push(p.clone());
            }
        }
        out
    }

    pub fn with_radius(&self, radius: f64) -> Self {
        PointConfig { radius, ..self.clone() }
    }

    pub fn with_points(&self, points: Vec<Vec<f64>>) -> Self {
        PointConfig { points, ..self.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    pub center: Vec<f64>,
    pub radius: f64,
}

impl BallSpec {
    pub fn contains(&self, y: &[f64], eps: f64) -> bool {
        linalg::dist(&self.center, y) <= self.radius + eps
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceProfile {
    pub predicate_eps: f64,
    pub quadrature_rel: f64,
    pub optimizer: f64,
    pub mc_sigmas: f64,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        ToleranceProfile {
            predicate_eps: 1e-9,
            quadrature_rel: 1e-10,
            optimizer: 1e-8,
            mc_sigmas: 3.0,
        }
    }
}

impl ToleranceProfile {
    pub fn validate(&self) -> Result<()> {
        for (what, v) in [
            ("predicate epsilon", self.predicate_eps),
            ("quadrature tolerance", self.quadrature_rel),
            ("optimizer tolerance", self.optimizer),
            ("confidence multiplier", self.mc_sigmas),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::OutOfRange { what, value: v });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "estimate", rename_all = "kebab-case")]
pub enum Provenance {
    Exact,
    Quadrature,
    MonteCarlo(Estimate),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntrinsicEntry {
    pub value: f64,
    pub provenance: Provenance,
}

/// Intrinsic volumes `V_k` of a body, keyed by `k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntrinsicProfile {
    pub dim: usize,
    pub values: BTreeMap<usize, IntrinsicEntry>,
    pub circumradius: Option<f64>,
    pub inradius: Option<f64>,
}

impl IntrinsicProfile {
    pub fn new(dim: usize) -> Self {
        IntrinsicProfile {
            dim,
            values: BTreeMap::new(),
            circumradius: None,
            inradius: None,
        }
    }

    pub fn set(&mut self, k: usize, value: f64, provenance: Provenance) {
        self.values.insert(k, IntrinsicEntry { value, provenance });
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        self.values.get(&k).map(|e| e.value)
    }

    pub fn volume(&self) -> f64 {
        self.get(self.dim).unwrap_or(0.0)
    }

    /// Surface area `2 V_{d-1}`.
    pub fn surface(&self) -> f64 {
        2.0 * self.get(self.dim - 1).unwrap_or(0.0)
    }
}
