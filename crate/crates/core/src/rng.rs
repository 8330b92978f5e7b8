//! Seeded random streams.
//!
//! Every stochastic routine takes an explicit `u64` seed. Work is split into
//! fixed-size blocks and each block draws from its own ChaCha stream derived
//! from `(seed, block index)`, so results do not depend on how blocks are
//! scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Samples per independent block in Monte Carlo loops.
pub const BLOCK: usize = 4096;

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the `index`-th substream of `seed`.
pub fn substream(seed: u64, index: u64) -> u64 {
    mix64(mix64(seed) ^ mix64(index.wrapping_add(0x5851_F42D_4C95_7F2D)))
}

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(substream(seed, index))
}

pub fn gaussian_vec<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect()
}

/// Uniform point on the unit sphere of `R^dim`.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let mut v = gaussian_vec(rng, dim);
        let n = crate::linalg::norm(&v);
        if n > 1e-300 {
            v.iter_mut().for_each(|x| *x /= n);
            return v;
        }
    }
}

/// Uniform point in the unit ball of `R^dim`.
pub fn in_unit_ball<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<f64> {
    let mut v = unit_vector(rng, dim);
    let u: f64 = rng.random();
    let s = u.powf(1.0 / dim as f64);
    v.iter_mut().for_each(|x| *x *= s);
    v
}

/// Fresh seed from the operating system.
pub fn entropy_seed() -> u64 {
    rand::rng().random()
}

/// Splits `samples` into `(block index, block length)` pairs.
pub fn blocks(samples: usize) -> impl Iterator<Item = (u64, usize)> + Clone {
    let n = samples.div_ceil(BLOCK);
    (0..n).map(move |b| {
        let len = if b + 1 == n { samples - b * BLOCK } else { BLOCK };
        (b as u64, len)
    })
}
