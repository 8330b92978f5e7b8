//! Unit-ball and intrinsic-volume constants.

use crate::error::{Error, Result};
use std::f64::consts::PI;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for real arguments (poles return `NaN`).
pub fn gamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}

/// Volume `ω_d` of the unit ball in `E^d`; `ω_0 = 1`.
pub fn unit_ball_volume(d: usize) -> f64 {
    let half = d as f64 / 2.0;
    PI.powf(half) / gamma(1.0 + half)
}

/// Surface measure of the unit sphere `S^{d-1}`, i.e. `d ω_d`.
pub fn unit_sphere_area(d: usize) -> f64 {
    d as f64 * unit_ball_volume(d)
}

pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `V_k` of the unit ball `B^d[o, 1]`: `C(d, k) ω_d / ω_{d-k}`.
pub fn intrinsic_ball_constant(d: usize, k: usize) -> Result<f64> {
    if k > d {
        return Err(Error::UnsupportedIndex { k, dim: d });
    }
    Ok(binomial(d, k) * unit_ball_volume(d) / unit_ball_volume(d - k))
}

/// Factor turning mean width into `V_1`: `d ω_d / (2 ω_{d-1})`.
pub fn mean_width_to_v1(d: usize) -> f64 {
    d as f64 * unit_ball_volume(d) / (2.0 * unit_ball_volume(d - 1))
}
