//! Suites by id: randomized trials on per-trial substreams, run in parallel.

use super::checks::*;
use super::generate::{gen_config, gen_hemisphere_free};
use super::kadets::check_kadets;
use super::record::{InstanceKind, InstanceSpec, SuiteRecord, SuiteReport};
use crate::error::{Error, Result};
use crate::planar::{check_minkowski_identity_2d, check_symmetral_2d};
use crate::rng;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

pub const SUITES: [&str; 13] = [
    "theorem1",
    "theorem2",
    "theorem3",
    "conjecture1",
    "corollary-intrinsic",
    "inradius-identity",
    "circumradius-bound",
    "kadets",
    "jung-symmetral",
    "symmetral-2d",
    "minkowski-identity",
    "sphere-lemma",
    "voronoi-density",
];

pub const MAX_SPHERE_DIM: usize = 6;
const DIRECTIONS_2D: usize = 360;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub suite: String,
    pub dim: usize,
    /// Largest point (or piece) count per trial.
    pub n: usize,
    pub k: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Fixed ball radius; otherwise `r / r0` is drawn from `ratio`.
    pub r: Option<f64>,
    pub r0: f64,
    pub ratio: (f64, f64),
    pub kind: InstanceKind,
    pub sphere_dim: usize,
    pub epsilons: Vec<f64>,
    /// Tolerance override for exact comparisons.
    pub tol: Option<f64>,
    pub budget: Budget,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            suite: "theorem1".into(),
            dim: 2,
            n: 10,
            k: None,
            trials: 100,
            seed: 0,
            r: None,
            r0: 1.0,
            ratio: (1.1, 5.0),
            kind: InstanceKind::Generic,
            sphere_dim: 2,
            epsilons: vec![0.3, 0.8, FRAC_PI_2],
            tol: None,
            budget: Budget::default(),
        }
    }
}

impl SuiteParams {
    pub fn new(suite: &str) -> Self {
        SuiteParams {
            suite: suite.into(),
            ..SuiteParams::default()
        }
    }

    fn budget(&self) -> Budget {
        let mut b = self.budget.clone();
        if let Some(t) = self.tol {
            b.tol = t;
        }
        b
    }

    fn instance(&self, trial_seed: u64, min_count: usize) -> Result<InstanceSpec> {
        let mut g = rng::stream(trial_seed, 0);
        let count = match self.kind {
            InstanceKind::AntipodalPair => 2,
            _ => g.random_range(min_count..=self.n.max(min_count)),
        };
        let r = match self.r {
            Some(r) => r,
            None => self.r0 * g.random_range(self.ratio.0..=self.ratio.1),
        };
        Ok(InstanceSpec {
            dim: self.dim,
            count,
            r0: self.r0,
            r,
            seed: trial_seed,
            kind: self.kind,
        })
    }
}

fn require_planar(p: &SuiteParams) -> Result<()> {
    if p.dim != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: p.dim,
        });
    }
    Ok(())
}

fn trial(p: &SuiteParams, t: usize) -> Result<Vec<SuiteRecord>> {
    let ts = rng::substream(p.seed, t as u64);
    let b = p.budget();
    let one = |rec: Result<SuiteRecord>| rec.map(|r| vec![r]);
    let with_config = |min_count: usize| -> Result<(InstanceSpec, crate::geometry::PointConfig)> {
        let inst = p.instance(ts, min_count)?;
        let cfg = gen_config(&inst)?;
        Ok((inst, cfg))
    };
    match p.suite.as_str() {
        "theorem1" => {
            let (i, c) = with_config(2)?;
            one(check_theorem1(&i, &c, &b))
        }
        "theorem2" => {
            let (i, c) = with_config(2)?;
            one(check_theorem2(&i, &c, p.k.unwrap_or(p.dim - 1), &b))
        }
        "conjecture1" => {
            let (i, c) = with_config(2)?;
            one(check_conjecture1(&i, &c, p.k.unwrap_or(1), &b))
        }
        "theorem3" => {
            let (i, c) = with_config(2)?;
            one(check_theorem3(&i, &c, &b))
        }
        "corollary-intrinsic" => {
            let (i, c) = with_config(2)?;
            one(check_corollary_intrinsic(&i, &c, p.k.unwrap_or(1), &b))
        }
        "inradius-identity" => {
            let (i, c) = with_config(2)?;
            let tol = p.tol.unwrap_or(if p.dim == 2 { 1e-9 } else { 1e-7 });
            one(check_inradius_identity(&i, &c, tol))
        }
        "circumradius-bound" => {
            let (i, c) = with_config(2)?;
            one(check_circumradius_bound(&i, &c, &b))
        }
        "kadets" => {
            require_planar(p)?;
            let n = 1 + t % p.n.max(1);
            one(check_kadets(p.r.unwrap_or(p.r0), n, ts))
        }
        "jung-symmetral" => {
            let l = p.k.unwrap_or(1 + t % p.dim);
            one(check_jung_symmetral(p.dim, l, p.r0, ts, t.is_multiple_of(5), b.tol))
        }
        "symmetral-2d" | "minkowski-identity" => {
            require_planar(p)?;
            let min_count = if p.suite == "symmetral-2d" { 3 } else { 2 };
            let (i, c) = with_config(min_count)?;
            let mut rec = if p.suite == "symmetral-2d" {
                check_symmetral_2d(&c, DIRECTIONS_2D, b.tol)?
            } else {
                check_minkowski_identity_2d(&c, DIRECTIONS_2D, b.tol)?
            };
            rec.instance = i;
            Ok(vec![rec])
        }
        "sphere-lemma" | "voronoi-density" => {
            if p.sphere_dim == 0 || p.sphere_dim > MAX_SPHERE_DIM {
                return Err(Error::OutOfRange {
                    what: "sphere dimension",
                    value: p.sphere_dim as f64,
                });
            }
            let mut g = rng::stream(ts, 0);
            let m = g.random_range(p.sphere_dim + 2..=p.n.max(p.sphere_dim + 2));
            let base = gen_hemisphere_free(p.sphere_dim, m, FRAC_PI_2, ts)?;
            let mut out = Vec::new();
            // one sample stream per trial, shared across ε
            let sample_seed = rng::substream(ts, 1);
            for &e in &p.epsilons {
                let cfg = base.with_epsilon(e)?;
                if p.suite == "sphere-lemma" {
                    out.push(check_sphere_lemma(&cfg, &b, sample_seed)?);
                } else {
                    out.extend(check_voronoi_density(&cfg, &b, sample_seed)?);
                }
            }
            Ok(out)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

pub fn run_suite(params: &SuiteParams) -> Result<SuiteReport> {
    if !SUITES.contains(&params.suite.as_str()) {
        return Err(Error::UnknownSuite(params.suite.clone()));
    }
    if params.dim < 2 {
        return Err(Error::OutOfRange {
            what: "dimension",
            value: params.dim as f64,
        });
    }
    let start = std::time::Instant::now();
    let records: Vec<SuiteRecord> = (0..params.trials)
        .into_par_iter()
        .map(|t| trial(params, t))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut map = BTreeMap::new();
    if let serde_json::Value::Object(obj) = serde_json::to_value(params)? {
        map.extend(obj);
    }
    let mut report = SuiteReport::new(&params.suite, map, params.seed, records);
    report.stamp(start.elapsed().as_secs_f64());
    Ok(report)
}
