use serde::{Deserialize, Serialize};

/// A Monte Carlo result; deterministic in `(seed, samples, method)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
    pub method: String,
}

impl Estimate {
    /// Estimate of `scale * p` from `hits` successes in `samples` trials.
    pub fn from_hits(hits: u64, samples: u64, scale: f64, seed: u64, method: &str) -> Self {
        let n = samples.max(1) as f64;
        let p = hits as f64 / n;
        // add-one proportion keeps the error positive when every or no sample hits
        let q = (hits as f64 + 1.0) / (n + 2.0);
        let var = q * (1.0 - q) / n;
        Estimate {
            value: scale * p,
            stderr: scale * var.sqrt(),
            samples,
            seed,
            method: method.to_string(),
        }
    }

    /// Estimate of the mean from a running `(sum, sum of squares)`.
    pub fn from_moments(sum: f64, sum_sq: f64, samples: u64, seed: u64, method: &str) -> Self {
        let n = samples.max(1) as f64;
        let mean = sum / n;
        let var = if samples > 1 {
            ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0)
        } else {
            0.0
        };
        Estimate {
            value: mean,
            stderr: (var / n).sqrt(),
            samples,
            seed,
            method: method.to_string(),
        }
    }

    pub fn scaled(mut self, factor: f64) -> Self {
        self.value *= factor;
        self.stderr *= factor.abs();
        self
    }

    /// Is `target` within `sigmas` standard errors (plus `floor`) of the value?
    pub fn agrees_with(&self, target: f64, sigmas: f64, floor: f64) -> bool {
        (self.value - target).abs() <= sigmas * self.stderr + floor
    }
}
