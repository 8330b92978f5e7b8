//! Hill-climbing search for configurations that shrink the margin of the
//! open intrinsic-volume inequalities:
//! `V_k(P^r) ≤ V_k(L_{r, r−r0, d})` and `V_k(S_{r, r0, d}) ≤ V_k(conv_r P)`.

use super::checks::{hull_intrinsic, polyhedron_intrinsic, Budget};
use super::generate::gen_generic;
use super::record::{noisy_verdict, InstanceKind, InstanceSpec, Side, SuiteRecord, SuiteReport, Verdict};
use crate::error::{Error, Result};
use crate::geometry::meb::minimal_enclosing_ball;
use crate::geometry::{lens_measures, spindle_measures, LensSpec, PointConfig, SpindleSpec};
use crate::linalg;
use crate::rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Consecutive rejections before the step size is halved.
pub const PATIENCE: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExploreParams {
    /// 1: lens upper bound for `P^r`; 2: spindle lower bound for `conv_r P`.
    pub conjecture: u8,
    pub dim: usize,
    pub k: usize,
    pub count: usize,
    pub r: f64,
    pub r0: f64,
    pub iterations: usize,
    pub restarts: usize,
    pub initial_step: f64,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for ExploreParams {
    fn default() -> Self {
        ExploreParams {
            conjecture: 1,
            dim: 2,
            k: 1,
            count: 6,
            r: 2.0,
            r0: 1.0,
            iterations: 200,
            restarts: 4,
            initial_step: 0.1,
            seed: 0,
            budget: Budget {
                samples: 20_000,
                directions: 100,
                hull_centers: vec![64],
                ..Budget::default()
            },
        }
    }
}

impl ExploreParams {
    pub fn validate(&self) -> Result<()> {
        if !matches!(self.conjecture, 1 | 2) {
            return Err(Error::OutOfRange {
                what: "conjecture id",
                value: self.conjecture as f64,
            });
        }
        if !matches!(self.dim, 2 | 3) {
            return Err(Error::OutOfRange {
                what: "dimension",
                value: self.dim as f64,
            });
        }
        if !(self.k == 1 || self.k + 1 == self.dim) {
            return Err(Error::UnsupportedIndex {
                k: self.k,
                dim: self.dim,
            });
        }
        if !(self.r > self.r0 && self.r0 > 0.0) {
            return Err(Error::HypothesisViolated(format!(
                "need r > r0 > 0, got r = {} and r0 = {}",
                self.r, self.r0
            )));
        }
        if self.count < 2 {
            return Err(Error::OutOfRange {
                what: "point count",
                value: self.count as f64,
            });
        }
        Ok(())
    }

    /// `(lhs, rhs)` of the inequality for `config`.
    pub fn sides(&self, config: &PointConfig, budget: &Budget, seed: u64) -> Result<(Side, Side)> {
        let d = self.dim;
        let missing = Error::UnsupportedIndex { k: self.k, dim: d };
        if self.conjecture == 1 {
            let lens = lens_measures(&LensSpec::new(d, self.r, self.r - self.r0)?)?
                .get(self.k)
                .ok_or(missing)?;
            Ok((polyhedron_intrinsic(config, self.k, budget, seed)?, Side::exact(lens)))
        } else {
            let spindle = spindle_measures(&SpindleSpec::new(d, self.r, self.r0)?)?
                .get(self.k)
                .ok_or(missing)?;
            Ok((Side::exact(spindle), hull_intrinsic(config, self.k, budget, seed)?))
        }
    }
}

/// Translates and scales `points` so their enclosing ball is `B[o, r0]`.
fn renormalize(points: &[Vec<f64>], r0: f64) -> Option<Vec<Vec<f64>>> {
    let eb = minimal_enclosing_ball(points, 0).ok()?;
    if eb.ball.radius < 1e-9 * r0 {
        return None;
    }
    let s = r0 / eb.ball.radius;
    Some(
        points
            .iter()
            .map(|p| linalg::scale(&linalg::sub(p, &eb.ball.center), s))
            .collect(),
    )
}

fn climb(params: &ExploreParams, restart: usize) -> Result<SuiteRecord> {
    let seed = rng::substream(params.seed, restart as u64);
    let eval_seed = rng::substream(seed, 0xE7A1);
    let mut config = gen_generic(params.dim, params.count, params.r0, params.r, seed)?;
    let margin_of = |c: &PointConfig| -> Result<f64> {
        let (l, r) = params.sides(c, &params.budget, eval_seed)?;
        Ok(r.value - l.value)
    };
    let mut current = margin_of(&config)?;
    let mut series = vec![current];
    let mut step = params.initial_step * params.r0;
    let mut rejections = 0;
    let mut accepted = 0;
    let mut g = rng::stream(seed, 1);
    for _ in 0..params.iterations {
        let moved: Vec<Vec<f64>> = config
            .points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| {
                        let z: f64 = StandardNormal.sample(&mut g);
                        x + step * z
                    })
                    .collect::<Vec<f64>>()
            })
            .collect();
        let Some(moved) = renormalize(&moved, params.r0) else {
            continue;
        };
        let candidate = config.with_points(moved);
        let m = margin_of(&candidate)?;
        if m < current {
            config = candidate;
            current = m;
            accepted += 1;
            rejections = 0;
        } else {
            rejections += 1;
            if rejections == PATIENCE {
                step /= 2.0;
                rejections = 0;
            }
        }
        series.push(current);
    }
    let instance = InstanceSpec {
        dim: params.dim,
        count: params.count,
        r0: params.r0,
        r: params.r,
        seed,
        kind: InstanceKind::Generic,
    };
    let (lhs, rhs) = params.sides(&config, &params.budget, eval_seed)?;
    let stderr = lhs.stderr.hypot(rhs.stderr);
    let budget = &params.budget;
    let mut rec = SuiteRecord::new(
        instance.clone(),
        lhs,
        rhs,
        stderr,
        noisy_verdict(rhs.value - lhs.value, stderr, budget.sigmas, budget.tol),
    );
    if rec.verdict == Verdict::Fail && stderr > 0.0 {
        // the search reuses one sample stream; re-measure the candidate independently
        let (l2, r2) = params.sides(&config, &budget.escalated(), rng::substream(eval_seed, 0xE5CA))?;
        let s2 = l2.stderr.hypot(r2.stderr);
        let first = rec.margin;
        rec = SuiteRecord::new(
            instance,
            l2,
            r2,
            s2,
            noisy_verdict(r2.value - l2.value, s2, budget.sigmas, budget.tol),
        )
        .detail("escalated", 1.0)
        .detail("first_margin", first);
    }
    if rec.verdict == Verdict::Fail {
        rec = rec.with_note("counterexample candidate");
    }
    rec.witnesses = config.points;
    rec.series = series;
    Ok(rec.detail("accepted", accepted as f64).detail("final_step", step))
}

/// Runs `restarts` independent climbs; each record holds the best
/// configuration found and its margin trajectory; `instance.seed` replays it.
pub fn explore_conjectures(params: &ExploreParams) -> Result<SuiteReport> {
    params.validate()?;
    let start = std::time::Instant::now();
    let records = (0..params.restarts)
        .into_par_iter()
        .map(|i| climb(params, i))
        .collect::<Result<Vec<_>>>()?;
    let mut map = BTreeMap::new();
    if let serde_json::Value::Object(obj) = serde_json::to_value(params)? {
        map.extend(obj);
    }
    let name = format!("explore-conjecture{}", params.conjecture);
    let mut report = SuiteReport::new(&name, map, params.seed, records);
    if let Some((i, _)) = report
        .records
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.margin.total_cmp(&b.1.margin))
    {
        report.summary.extra.insert("best_trial".into(), i as f64);
    }
    report.stamp(start.elapsed().as_secs_f64());
    Ok(report)
}
