//! Input generators shared by the criterion benches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_i64(m: u32, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..1usize << m).map(|_| rng.gen_range(-1000..=1000)).collect()
}

pub fn random_f64(m: u32, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..1usize << m).map(|_| rng.gen_range(-1.0..1.0)).collect()
}
