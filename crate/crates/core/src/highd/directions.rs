//! Nested, well-spread direction sequences on `S^{d−1}`.

use crate::linalg;
use crate::rng;
use rand::Rng;
use std::f64::consts::TAU;

pub fn radical_inverse(mut k: u64, base: u64) -> f64 {
    let mut inv = 1.0 / base as f64;
    let mut x = 0.0;
    while k > 0 {
        x += (k % base) as f64 * inv;
        k /= base;
        inv /= base as f64;
    }
    x
}

/// Random rotation of `R^3` (QR of a Gaussian matrix via Gram–Schmidt).
fn random_rotation3(seed: u64) -> [Vec<f64>; 3] {
    let mut g = rng::stream(seed, 0xd1);
    loop {
        let cols: Vec<Vec<f64>> = (0..3).map(|_| rng::gaussian_vec(&mut g, 3)).collect();
        let b = linalg::orthonormal_basis(&cols, 1e-6);
        if b.len() == 3 {
            return [b[0].clone(), b[1].clone(), b[2].clone()];
        }
    }
}

/// First `m` directions of a sequence whose prefixes are all well spread:
/// van der Corput angles (d = 2), a Halton point set mapped to the sphere
/// (d = 3), seeded Gaussian directions otherwise.
pub fn directions(dim: usize, m: usize, seed: u64) -> Vec<Vec<f64>> {
    match dim {
        1 => (0..m).map(|k| vec![if k % 2 == 0 { 1.0 } else { -1.0 }]).collect(),
        2 => {
            let phase: f64 = rng::stream(seed, 0xd2).random();
            (0..m)
                .map(|k| {
                    let t = TAU * (phase + radical_inverse(k as u64, 2));
                    vec![t.cos(), t.sin()]
                })
                .collect()
        }
        3 => {
            let rot = random_rotation3(seed);
            (0..m)
                .map(|k| {
                    let k = k as u64 + 1;
                    let z = 1.0 - 2.0 * radical_inverse(k, 2);
                    let phi = TAU * radical_inverse(k, 3);
                    let s = (1.0 - z * z).max(0.0).sqrt();
                    let v = [s * phi.cos(), s * phi.sin(), z];
                    (0..3)
                        .map(|i| rot.iter().zip(&v).map(|(col, vj)| col[i] * vj).sum())
                        .collect()
                })
                .collect()
        }
        _ => (0..m)
            .map(|k| rng::unit_vector(&mut rng::stream(seed, k as u64), dim))
            .collect(),
    }
}
